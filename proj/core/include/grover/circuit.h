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

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grover/statevector.h"

namespace grover {

struct SingleGate {
    GateKind kind;
    Qubit target;

    bool operator==(const SingleGate &) const = default;
};

struct MultiControlledGate {
    ControlledBase base;
    std::vector<Qubit> controls;  // sorted ascending, no duplicates
    Qubit target;

    bool operator==(const MultiControlledGate &) const = default;
};

using GateOp = std::variant<SingleGate, MultiControlledGate>;

/// Ordered gate program over a fixed register width. Every op is validated
/// against the width when appended, so a Circuit is always well formed.
class Circuit {
   public:
    explicit Circuit(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept {
        return n_qubits_;
    }
    const std::vector<GateOp> &ops() const noexcept {
        return ops_;
    }
    std::size_t size() const noexcept {
        return ops_.size();
    }
    bool empty() const noexcept {
        return ops_.empty();
    }

    Circuit &append(GateOp op);
    Circuit &append(const Circuit &other);
    Circuit &single(GateKind kind, Qubit target) {
        return append(SingleGate{kind, target});
    }
    /// Controls may be given in any order; they are stored sorted.
    Circuit &multicontrolled(ControlledBase base, std::vector<Qubit> controls, Qubit target);
    /// The same single-qubit gate on each listed qubit, in list order.
    Circuit &layer(GateKind kind, const std::vector<Qubit> &targets);

    bool operator==(const Circuit &) const = default;

   private:
    std::size_t n_qubits_;
    std::vector<GateOp> ops_;
};

enum class OracleStyle {
    McxAncilla,  // multi-controlled X onto an ancilla held in |m>
    MczDirect,   // multi-controlled Z on the data register
};

/// Problem statement. `marked` is kept sorted ascending and duplicate-free.
struct GroverSpec {
    std::size_t n = 0;
    std::vector<Bitstring> marked;
    std::size_t iterations = 0;
    OracleStyle style = OracleStyle::MczDirect;

    /// Sorts the marked set and checks widths, distinctness and
    /// 1 <= |marked| < 2^n. Throws SpecError.
    static GroverSpec make(std::size_t n, std::vector<Bitstring> marked, std::size_t iterations, OracleStyle style);

    /// Data qubits plus the ancilla when the style needs one.
    std::size_t width() const noexcept {
        return style == OracleStyle::McxAncilla ? n + 1 : n;
    }
};

/// Checks (n, marked) and returns the marked set sorted ascending.
std::vector<Bitstring> validate_marked(std::size_t n, std::vector<Bitstring> marked);

/// One X-sandwiched multi-controlled block per marked string, ascending.
/// McxAncilla circuits are n+1 wide with the ancilla at index n.
Circuit compile_phase_oracle(std::size_t n, const std::vector<Bitstring> &marked, OracleStyle style);

/// H, X, MCZ, X, H layers on qubits 0..n-1. Realizes -(2|p><p| - Id); the
/// overall -1 never shows in probabilities. `width` >= n pads the circuit
/// for registers that carry an ancilla.
Circuit compile_diffuser(std::size_t n, std::optional<std::size_t> width = std::nullopt);

/// Prologue (X on the ancilla, then H on every qubit) followed by
/// `iterations` rounds of oracle + diffuser.
Circuit build_grover_circuit(const GroverSpec &spec);

/// Circuit preparing the uniform start state: |p>^n, or |p>^n (x) |m>.
Circuit compile_prologue(std::size_t n, OracleStyle style);

/// Labeled half-open op range [begin, end) inside a Grover circuit.
struct StepRange {
    std::string label;        // "1.0", "1.1", "2.1" .. "2.3", "3.1" .. "3.5"
    std::string description;  // e.g. "X layer on {1,3,4}"
    std::size_t iteration = 0;  // 0 for the prologue, 1.. for each round
    std::size_t block = 0;      // marked-string index for oracle steps
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// Step ranges matching build_grover_circuit(spec), in op order. Ranges are
/// contiguous and cover the whole circuit; some may be empty (e.g. no X
/// layer when a marked string is all ones).
std::vector<StepRange> grover_step_ranges(const GroverSpec &spec);

struct RunResult {
    StateVector final_state;
    /// snapshots[i] is the state after ops()[i]. Empty unless traced.
    std::vector<StateVector> snapshots;
};

RunResult run(const Circuit &circuit, StateVector initial, bool trace = false);

/// States at the end of each step range. A range with no ops repeats the
/// previous state (or the initial state for the first range).
std::vector<StateVector> group_trace(const StateVector &initial, const RunResult &result,
                                     const std::vector<StepRange> &ranges);

inline constexpr std::size_t kMaxDenseQubits = 10;

/// Column i is run(circuit, e_i). n_qubits <= kMaxDenseQubits.
Eigen::MatrixXcd dense_unitary(const Circuit &circuit);

}  // namespace grover
