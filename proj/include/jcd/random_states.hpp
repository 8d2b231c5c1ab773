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

// Seeded random instances for property checks.

#include <random>

#include "jcd/types.hpp"

namespace jcd::random {

using Engine = std::mt19937_64;

/// Ginibre-distributed complex d x d matrix with standard normal entries.
CMatrix ginibre(int rows, int cols, Engine &rng);

/// Full-rank density matrix G G^dag / Tr(G G^dag).
CMatrix density_matrix(int dim, Engine &rng);

/// Uniformly distributed unit vector.
CVector pure_state(int dim, Engine &rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
CMatrix haar_unitary(int dim, Engine &rng);

} // namespace jcd::random
