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

#include <stdexcept>
#include <string>

namespace jcd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// Input is not a density matrix (trace, Hermiticity or positivity).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Field truncation too small for the requested coherent state.
class TruncationError : public Error {
  public:
    TruncationError(const std::string &what, int required_dim)
        : Error(what), required_dim_(required_dim) {}

    [[nodiscard]] int required_dim() const noexcept { return required_dim_; }

  private:
    int required_dim_;
};

/// Mixing angle is undefined when the coupling vanishes.
class DegenerateCoupling : public Error {
  public:
    using Error::Error;
};

/// Steady-state operations need a strictly positive dephasing rate.
class NoSteadyState : public Error {
  public:
    using Error::Error;
};

class Unsupported : public Error {
  public:
    using Error::Error;
};

/// Invalid experiment configuration (maps to CLI exit code 2).
class ConfigError : public Error {
  public:
    using Error::Error;
};

} // namespace jcd
