// Copyright 2026 The phqm Authors
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

#ifndef PHQM_ERRORS_HPP
#define PHQM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace phqm {

enum class ErrorKind {
    // Input/contract violations (CLI exit code 2).
    DimensionMismatch,
    NotHermitian,
    NotUnitary,
    NotIntertwiner,
    NotQuasiHermitian,
    IncompatibleMetric,
    MixedGlobalState,
    NotPositive,
    NotNormalized,
    IncompletePovm,
    NotLocalPovm,
    InconsistentData,
    StepTooLarge,
    BasisOverflow,
    InvalidArgument,
    // Failures discovered during computation (CLI exit code 3).
    NonDiagonalizable,
    NotPositiveDefinite,
    ComplexSpectrum,
    SingularFrame,
};

const char* error_kind_name(ErrorKind kind);

/// True for errors that indicate bad input rather than a numerical failure.
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace phqm

#endif  // PHQM_ERRORS_HPP
