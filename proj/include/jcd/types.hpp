// Copyright 2026 The jcd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <complex>

#include <Eigen/Dense>

namespace jcd {

using cplx = std::complex<double>;

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Composite states are stored atom-major: index(a, n) = a * N + n with
/// a = 0 for |e> and a = 1 for |g>.
enum class AtomLevel : int { Excited = 0, Ground = 1 };

inline constexpr int composite_index(AtomLevel a, int n, int field_dim) noexcept {
    return static_cast<int>(a) * field_dim + n;
}

} // namespace jcd
