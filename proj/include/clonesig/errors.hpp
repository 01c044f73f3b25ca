// Copyright 2026 The clonesig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clonesig {

enum class ErrorCode {
  InvalidState,
  InvalidDimension,
  DimensionMismatch,
  InvalidArgument,
  DegenerateTriple,
  InvalidShape,
  NotABasis,
  PreconditionFailed,
  NotIndependent,
  Infeasible,
  NotInEnsemble,
  NotRealAmplitude,
  UnsupportedDimension,
  EmptyData,
  ConfigError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a PSD feasibility condition fails; carries the most negative
/// eigenvalue that witnesses the violation.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, double min_eigenvalue)
      : Error(ErrorCode::Infeasible, what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

}  // namespace clonesig
