// Copyright 2026 The ghzcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHZCAT_ERRORS_H
#define GHZCAT_ERRORS_H

#include <stdexcept>
#include <string>

namespace ghzcat {

/// Two states (or a state and an operator) live in spaces of different size.
struct SizeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The atom count exceeds what a representation or algorithm supports.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// A product-space state has a component outside the symmetric subspace.
struct OutOfSubspaceError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A state that must be normalized is not.
struct NormalizationError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Eigensolver failure or a spectrum that violates a known structural property.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ghzcat

#endif
