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

// Line-oriented circuit text:
//
//   # qubits: 3
//   H 0
//   X 2
//   MCX c=0,1 t=2
//   MCZ c=0,1 t=2
//
// Blank lines and anything after '#' are ignored, except that a
// "# qubits: N" comment fixes the register width. Without it the width is
// the largest index mentioned plus one.

#pragma once

#include <string>
#include <string_view>

#include "grover/circuit.h"

namespace grover {

std::string format_circuit(const Circuit &circuit);

/// Throws ParseError naming the 1-based line and offending token.
Circuit parse_circuit(std::string_view text);

}  // namespace grover
