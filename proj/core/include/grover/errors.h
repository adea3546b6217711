// Copyright 2026 The grover-kit Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace grover {

/// Caller supplied something the library rejects. Everything deriving from
/// this maps to a usage error (exit code 2) at the command line.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Qubit count or matrix dimension outside the supported range.
struct SizeError : ValidationError {
    using ValidationError::ValidationError;
};

/// Qubit index out of range, or overlapping control/target sets.
struct IndexError : ValidationError {
    using ValidationError::ValidationError;
};

/// Two states (or a state and a circuit) of different widths.
struct ShapeError : ValidationError {
    using ValidationError::ValidationError;
};

/// Ill-formed problem statement: marked set, iteration count, shots.
struct SpecError : ValidationError {
    using ValidationError::ValidationError;
};

/// Circuit text that does not parse. Carries the 1-based line number.
struct ParseError : ValidationError {
    ParseError(std::size_t line, const std::string &token, const std::string &what)
        : ValidationError("line " + std::to_string(line) + ": " + what + " (at '" + token + "')"),
          line_number(line),
          token(token) {
    }
    std::size_t line_number;
    std::string token;
};

/// A broken library invariant, e.g. an ancilla that failed to factor out.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace grover
