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

#include "grover/circuit.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "grover/errors.h"

namespace grover {

namespace {

void check_index(std::size_t width, Qubit q) {
    if (q >= width) {
        throw IndexError("qubit " + std::to_string(q) + " out of range for " + std::to_string(width) +
                         "-qubit circuit");
    }
}

std::vector<Qubit> iota_qubits(std::size_t count) {
    std::vector<Qubit> qs(count);
    std::iota(qs.begin(), qs.end(), Qubit{0});
    return qs;
}

std::vector<Qubit> zero_positions(const Bitstring &r) {
    std::vector<Qubit> qs;
    for (Qubit q = 0; q < r.size(); ++q) {
        if (!r.bit(q)) {
            qs.push_back(q);
        }
    }
    return qs;
}

std::string describe_set(const std::vector<Qubit> &qs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < qs.size(); ++i) {
        out << (i ? "," : "") << qs[i];
    }
    out << '}';
    return out.str();
}

}  // namespace

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw SizeError("circuit width " + std::to_string(n_qubits) + " outside [1, " + std::to_string(kMaxQubits) +
                        "]");
    }
}

Circuit &Circuit::append(GateOp op) {
    if (auto *g = std::get_if<SingleGate>(&op)) {
        check_index(n_qubits_, g->target);
    } else {
        auto &mc = std::get<MultiControlledGate>(op);
        if (mc.controls.empty()) {
            throw IndexError("multi-controlled gate needs at least one control");
        }
        check_index(n_qubits_, mc.target);
        std::sort(mc.controls.begin(), mc.controls.end());
        for (std::size_t i = 0; i < mc.controls.size(); ++i) {
            check_index(n_qubits_, mc.controls[i]);
            if (mc.controls[i] == mc.target) {
                throw IndexError("control " + std::to_string(mc.target) + " coincides with target");
            }
            if (i > 0 && mc.controls[i] == mc.controls[i - 1]) {
                throw IndexError("duplicate control " + std::to_string(mc.controls[i]));
            }
        }
    }
    ops_.push_back(std::move(op));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits_ > n_qubits_) {
        throw ShapeError("cannot append a " + std::to_string(other.n_qubits_) + "-qubit circuit to a " +
                         std::to_string(n_qubits_) + "-qubit one");
    }
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    return *this;
}

Circuit &Circuit::multicontrolled(ControlledBase base, std::vector<Qubit> controls, Qubit target) {
    return append(MultiControlledGate{base, std::move(controls), target});
}

Circuit &Circuit::layer(GateKind kind, const std::vector<Qubit> &targets) {
    for (Qubit q : targets) {
        single(kind, q);
    }
    return *this;
}

std::vector<Bitstring> validate_marked(std::size_t n, std::vector<Bitstring> marked) {
    if (n < 2 || n > kMaxQubits) {
        throw SpecError("data qubit count " + std::to_string(n) + " outside [2, " + std::to_string(kMaxQubits) + "]");
    }
    if (marked.empty()) {
        throw SpecError("marked set is empty");
    }
    for (const auto &r : marked) {
        if (r.size() != n) {
            throw SpecError("marked string '" + r.str() + "' has length " + std::to_string(r.size()) +
                            ", expected " + std::to_string(n));
        }
    }
    std::sort(marked.begin(), marked.end(),
              [](const Bitstring &a, const Bitstring &b) { return a.index() < b.index(); });
    if (std::adjacent_find(marked.begin(), marked.end()) != marked.end()) {
        throw SpecError("marked set contains duplicates");
    }
    if (marked.size() >= (std::uint64_t{1} << n)) {
        throw SpecError("marked set covers the whole search space");
    }
    return marked;
}

GroverSpec GroverSpec::make(std::size_t n, std::vector<Bitstring> marked, std::size_t iterations,
                            OracleStyle style) {
    GroverSpec spec;
    spec.n = n;
    spec.marked = validate_marked(n, std::move(marked));
    spec.iterations = iterations;
    spec.style = style;
    if (spec.width() > kMaxQubits) {
        throw SpecError("register of " + std::to_string(spec.width()) + " qubits exceeds " +
                        std::to_string(kMaxQubits));
    }
    return spec;
}

Circuit compile_phase_oracle(std::size_t n, const std::vector<Bitstring> &marked, OracleStyle style) {
    const auto sorted = validate_marked(n, marked);
    const std::size_t width = style == OracleStyle::McxAncilla ? n + 1 : n;
    Circuit c(width);
    const auto data = iota_qubits(n);
    for (const auto &r : sorted) {
        const auto zeros = zero_positions(r);
        c.layer(GateKind::X, zeros);
        if (style == OracleStyle::McxAncilla) {
            c.multicontrolled(ControlledBase::X, data, n);
        } else {
            c.multicontrolled(ControlledBase::Z, iota_qubits(n - 1), n - 1);
        }
        c.layer(GateKind::X, zeros);
    }
    return c;
}

Circuit compile_diffuser(std::size_t n, std::optional<std::size_t> width) {
    if (n < 2) {
        throw SpecError("diffuser needs at least 2 qubits, got " + std::to_string(n));
    }
    const std::size_t w = width.value_or(n);
    if (w < n) {
        throw ShapeError("diffuser width smaller than its data register");
    }
    const auto data = iota_qubits(n);
    Circuit c(w);
    c.layer(GateKind::H, data);
    c.layer(GateKind::X, data);
    c.multicontrolled(ControlledBase::Z, iota_qubits(n - 1), n - 1);
    c.layer(GateKind::X, data);
    c.layer(GateKind::H, data);
    return c;
}

Circuit compile_prologue(std::size_t n, OracleStyle style) {
    const std::size_t width = style == OracleStyle::McxAncilla ? n + 1 : n;
    Circuit c(width);
    if (style == OracleStyle::McxAncilla) {
        c.single(GateKind::X, n);
    }
    c.layer(GateKind::H, iota_qubits(width));
    return c;
}

Circuit build_grover_circuit(const GroverSpec &spec) {
    const auto checked = GroverSpec::make(spec.n, spec.marked, spec.iterations, spec.style);
    Circuit c = compile_prologue(checked.n, checked.style);
    const Circuit oracle = compile_phase_oracle(checked.n, checked.marked, checked.style);
    const Circuit diffuser = compile_diffuser(checked.n, checked.width());
    for (std::size_t k = 0; k < checked.iterations; ++k) {
        c.append(oracle);
        c.append(diffuser);
    }
    return c;
}

std::vector<StepRange> grover_step_ranges(const GroverSpec &spec) {
    const auto checked = GroverSpec::make(spec.n, spec.marked, spec.iterations, spec.style);
    const std::size_t n = checked.n;
    const bool ancilla = checked.style == OracleStyle::McxAncilla;
    std::vector<StepRange> ranges;
    std::size_t pos = 0;
    auto push = [&](std::string label, std::string description, std::size_t iteration, std::size_t block,
                    std::size_t count) {
        ranges.push_back(StepRange{std::move(label), std::move(description), iteration, block, pos, pos + count});
        pos += count;
    };
    const auto data = iota_qubits(n);
    const std::string data_set = describe_set(data);

    push("1.0", ancilla ? "X on ancilla " + std::to_string(n) : "initial state", 0, 0, ancilla ? 1 : 0);
    push("1.1", "H layer on " + describe_set(iota_qubits(checked.width())), 0, 0, checked.width());
    for (std::size_t k = 1; k <= checked.iterations; ++k) {
        for (std::size_t b = 0; b < checked.marked.size(); ++b) {
            const auto zeros = zero_positions(checked.marked[b]);
            push("2.1", "X layer on " + describe_set(zeros), k, b, zeros.size());
            push("2.2",
                 ancilla ? "MCX c=" + data_set + " t=" + std::to_string(n)
                         : "MCZ c=" + describe_set(iota_qubits(n - 1)) + " t=" + std::to_string(n - 1),
                 k, b, 1);
            push("2.3", "X layer on " + describe_set(zeros), k, b, zeros.size());
        }
        push("3.1", "H layer on " + data_set, k, 0, n);
        push("3.2", "X layer on " + data_set, k, 0, n);
        push("3.3", "MCZ c=" + describe_set(iota_qubits(n - 1)) + " t=" + std::to_string(n - 1), k, 0, 1);
        push("3.4", "X layer on " + data_set, k, 0, n);
        push("3.5", "H layer on " + data_set, k, 0, n);
    }
    return ranges;
}

RunResult run(const Circuit &circuit, StateVector initial, bool trace) {
    if (initial.n_qubits() != circuit.n_qubits()) {
        throw ShapeError("initial state has " + std::to_string(initial.n_qubits()) + " qubits, circuit has " +
                         std::to_string(circuit.n_qubits()));
    }
    RunResult result{std::move(initial), {}};
    if (trace) {
        result.snapshots.reserve(circuit.size());
    }
    for (const auto &op : circuit.ops()) {
        if (const auto *g = std::get_if<SingleGate>(&op)) {
            result.final_state.apply_single_inplace(g->kind, g->target);
        } else {
            const auto &mc = std::get<MultiControlledGate>(op);
            result.final_state.apply_multicontrolled_inplace(mc.base, mc.controls, mc.target);
        }
        if (trace) {
            result.snapshots.push_back(result.final_state);
        }
    }
    return result;
}

std::vector<StateVector> group_trace(const StateVector &initial, const RunResult &result,
                                     const std::vector<StepRange> &ranges) {
    std::vector<StateVector> states;
    states.reserve(ranges.size());
    for (const auto &r : ranges) {
        if (r.end > result.snapshots.size()) {
            throw ShapeError("step range ends past the traced ops");
        }
        if (r.end == 0) {
            states.push_back(initial);
        } else {
            states.push_back(result.snapshots[r.end - 1]);
        }
    }
    return states;
}

Eigen::MatrixXcd dense_unitary(const Circuit &circuit) {
    const std::size_t n = circuit.n_qubits();
    if (n > kMaxDenseQubits) {
        throw SizeError("dense unitary limited to " + std::to_string(kMaxDenseQubits) + " qubits, got " +
                        std::to_string(n));
    }
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const auto out = run(circuit, StateVector::basis_state(n, static_cast<std::uint64_t>(col))).final_state;
        for (Eigen::Index row = 0; row < dim; ++row) {
            u(row, col) = out[static_cast<std::uint64_t>(row)];
        }
    }
    return u;
}

}  // namespace grover
