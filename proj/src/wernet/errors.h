// Copyright 2026 The wernet Authors
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

#ifndef WERNET_ERRORS_H
#define WERNET_ERRORS_H

#include <stdexcept>

namespace wernet {

/// Base class for failures of a numerical procedure (root bracketing,
/// quadrature, expansions). Precondition violations use std::invalid_argument
/// and std::domain_error instead.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The constraints admit no range of y in which the protocol beats direct swapping.
struct NoGoodIntervalError : NumericalError {
    using NumericalError::NumericalError;
};

/// A perturbative expansion whose leading coefficient vanishes.
struct HigherOrderError : NumericalError {
    using NumericalError::NumericalError;
};

/// The defining equation vanishes identically, so there is no isolated root.
struct DegenerateEquationError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace wernet

#endif
