// Copyright 2026 The toric-entropy Authors
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

#ifndef TORIC_ERRORS_H
#define TORIC_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric {

/// Bad argument or precondition violation (exit status 1 in the CLI).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A region spec that failed to parse; `position` is the 0-based character offset.
struct ParseError : ArgumentError {
    ParseError(const std::string &what, size_t position)
        : ArgumentError(what + " at position " + std::to_string(position)), position(position) {
    }
    size_t position;
};

/// A surface document violating one of the cell-complex invariants.
struct ValidationError : std::runtime_error {
    ValidationError(std::string check, const std::string &detail)
        : std::runtime_error(check + ": " + detail), check(std::move(check)) {
    }
    std::string check;
};

/// Exponential work (group enumeration, dense eigensolve) above its configured limit.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedOperationError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Internal consistency failure, e.g. a two-spin density matrix that should be diagonal is not.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace toric

#endif
