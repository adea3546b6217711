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

#include <cmath>

#include "grover/errors.h"
#include "grover/geometry.h"
#include "gtest/gtest.h"
#include "testing/reference.h"

using namespace grover;
using grover::testing::ket;
using grover::testing::ket_state;
using grover::testing::Mat;
using grover::testing::Vec;

namespace {

std::vector<Bitstring> bits(std::initializer_list<const char *> list) {
    std::vector<Bitstring> out;
    for (const char *s : list) {
        out.push_back(Bitstring::parse(s));
    }
    return out;
}

Circuit expected(std::size_t width, std::initializer_list<GateOp> ops) {
    Circuit c(width);
    for (const auto &op : ops) {
        c.append(op);
    }
    return c;
}

StateVector uniform(std::size_t n) {
    return ket_state(std::string(n, 'p'));
}

}  // namespace

TEST(circuit, append_validates_and_sorts_controls) {
    Circuit c(3);
    c.multicontrolled(ControlledBase::X, {1, 0}, 2);
    EXPECT_EQ(std::get<MultiControlledGate>(c.ops()[0]).controls, (std::vector<Qubit>{0, 1}));
    EXPECT_THROW(c.single(GateKind::H, 3), IndexError);
    EXPECT_THROW(c.multicontrolled(ControlledBase::X, {}, 2), IndexError);
    EXPECT_THROW(c.multicontrolled(ControlledBase::X, {2}, 2), IndexError);
    EXPECT_THROW(c.multicontrolled(ControlledBase::Z, {0, 0}, 2), IndexError);
    EXPECT_THROW(Circuit(0), SizeError);
    EXPECT_EQ(c.size(), 1U);
}

TEST(compile_phase_oracle, five_qubit_ancilla_example) {
    const auto c = compile_phase_oracle(5, bits({"10100"}), OracleStyle::McxAncilla);
    const auto want = expected(6, {SingleGate{GateKind::X, 1}, SingleGate{GateKind::X, 3}, SingleGate{GateKind::X, 4},
                                   MultiControlledGate{ControlledBase::X, {0, 1, 2, 3, 4}, 5},
                                   SingleGate{GateKind::X, 1}, SingleGate{GateKind::X, 3},
                                   SingleGate{GateKind::X, 4}});
    EXPECT_EQ(c, want);
}

TEST(compile_phase_oracle, all_ones_has_no_sandwich) {
    EXPECT_EQ(compile_phase_oracle(5, bits({"11111"}), OracleStyle::McxAncilla),
              expected(6, {MultiControlledGate{ControlledBase::X, {0, 1, 2, 3, 4}, 5}}));
    EXPECT_EQ(compile_phase_oracle(5, bits({"11111"}), OracleStyle::MczDirect),
              expected(5, {MultiControlledGate{ControlledBase::Z, {0, 1, 2, 3}, 4}}));
}

TEST(compile_phase_oracle, three_qubit_direct_example) {
    EXPECT_EQ(compile_phase_oracle(3, bits({"001"}), OracleStyle::MczDirect),
              expected(3, {SingleGate{GateKind::X, 0}, SingleGate{GateKind::X, 1},
                           MultiControlledGate{ControlledBase::Z, {0, 1}, 2}, SingleGate{GateKind::X, 0},
                           SingleGate{GateKind::X, 1}}));
}

TEST(compile_phase_oracle, blocks_sorted_ascending) {
    const auto c = compile_phase_oracle(2, bits({"11", "01"}), OracleStyle::MczDirect);
    // 01 first (X on 0 sandwich), then 11 (bare).
    EXPECT_EQ(c, expected(2, {SingleGate{GateKind::X, 0}, MultiControlledGate{ControlledBase::Z, {0}, 1},
                              SingleGate{GateKind::X, 0}, MultiControlledGate{ControlledBase::Z, {0}, 1}}));
}

TEST(compile_phase_oracle, spec_errors) {
    EXPECT_THROW(compile_phase_oracle(2, {}, OracleStyle::MczDirect), SpecError);
    EXPECT_THROW(compile_phase_oracle(2, bits({"00", "01", "10", "11"}), OracleStyle::MczDirect), SpecError);
    EXPECT_THROW(compile_phase_oracle(2, bits({"01", "01"}), OracleStyle::MczDirect), SpecError);
    EXPECT_THROW(compile_phase_oracle(3, bits({"01"}), OracleStyle::MczDirect), SpecError);
}

TEST(compile_phase_oracle, direct_oracle_is_diagonal_sign_flip) {
    // Enumerate all 8 basis states through the simulator.
    const auto c = compile_phase_oracle(3, bits({"001"}), OracleStyle::MczDirect);
    const Mat u = dense_unitary(c);
    Mat want = Mat::Identity(8, 8);
    want(1, 1) = -1;
    EXPECT_LT(grover::testing::max_abs_diff(u, want), 1e-15);
}

TEST(compile_diffuser, op_sequence) {
    EXPECT_EQ(compile_diffuser(2), expected(2, {SingleGate{GateKind::H, 0}, SingleGate{GateKind::H, 1},
                                                SingleGate{GateKind::X, 0}, SingleGate{GateKind::X, 1},
                                                MultiControlledGate{ControlledBase::Z, {0}, 1},
                                                SingleGate{GateKind::X, 0}, SingleGate{GateKind::X, 1},
                                                SingleGate{GateKind::H, 0}, SingleGate{GateKind::H, 1}}));
    EXPECT_THROW(compile_diffuser(1), SpecError);
    EXPECT_EQ(compile_diffuser(3, 4).n_qubits(), 4U);
}

TEST(compile_diffuser, matches_matrix_algebra) {
    for (std::size_t n = 2; n <= 8; ++n) {
        const Mat reference = grover::testing::diffuser_reference(n);
        EXPECT_LT(grover::testing::max_abs_diff(dense_unitary(compile_diffuser(n)), reference), 1e-12) << n;
    }
}

TEST(compile_diffuser, uniform_is_minus_one_eigenvector) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto out = run(compile_diffuser(n), uniform(n)).final_state;
        EXPECT_NEAR(inner_product(uniform(n), out).real(), -1.0, 1e-12) << n;
    }
}

TEST(compile_diffuser, fixes_orthogonal_complement) {
    for (std::size_t n = 2; n <= 6; ++n) {
        Vec v = ket(std::string(n, '0')) - ket(std::string(n, '1'));
        v /= std::sqrt(2.0);
        const auto in = grover::testing::to_state(v);
        const auto out = run(compile_diffuser(n), in).final_state;
        EXPECT_NEAR(inner_product(in, out).real(), 1.0, 1e-12) << n;
    }
}

TEST(build_grover_circuit, two_qubit_ancilla_structure) {
    const auto spec = GroverSpec::make(2, bits({"01"}), 1, OracleStyle::McxAncilla);
    const auto c = build_grover_circuit(spec);
    Circuit want(3);
    want.single(GateKind::X, 2).layer(GateKind::H, {0, 1, 2});
    want.single(GateKind::X, 0).multicontrolled(ControlledBase::X, {0, 1}, 2).single(GateKind::X, 0);
    want.layer(GateKind::H, {0, 1}).layer(GateKind::X, {0, 1});
    want.multicontrolled(ControlledBase::Z, {0}, 1);
    want.layer(GateKind::X, {0, 1}).layer(GateKind::H, {0, 1});
    EXPECT_EQ(c, want);
}

TEST(build_grover_circuit, zero_iterations_is_prologue) {
    const auto spec = GroverSpec::make(5, bits({"10100"}), 0, OracleStyle::McxAncilla);
    const auto c = build_grover_circuit(spec);
    EXPECT_EQ(c.size(), 7U);
    const auto data = data_state(spec, run(c, zero_state(6)).final_state);
    EXPECT_NEAR(data.probability(20), 1.0 / 32, 1e-15);
}

TEST(build_grover_circuit, spec_validation) {
    EXPECT_THROW(GroverSpec::make(1, bits({"1"}), 1, OracleStyle::MczDirect), SpecError);
    EXPECT_THROW(GroverSpec::make(kMaxQubits, {Bitstring::from_index(0, kMaxQubits)}, 1, OracleStyle::McxAncilla),
                 SpecError);
}

TEST(run, empty_circuit_returns_initial) {
    std::mt19937_64 rng(3);
    const auto psi = grover::testing::random_state(3, rng);
    const auto result = run(Circuit(3), psi, true);
    EXPECT_EQ(result.final_state, psi);
    EXPECT_TRUE(result.snapshots.empty());
}

TEST(run, shape_mismatch) {
    EXPECT_THROW(run(Circuit(3), zero_state(2)), ShapeError);
}

TEST(run, snapshots_only_when_traced) {
    const auto spec = GroverSpec::make(2, bits({"01"}), 1, OracleStyle::McxAncilla);
    const auto c = build_grover_circuit(spec);
    EXPECT_TRUE(run(c, zero_state(3)).snapshots.empty());
    const auto traced = run(c, zero_state(3), true);
    ASSERT_EQ(traced.snapshots.size(), c.size());
    EXPECT_EQ(traced.snapshots.back(), traced.final_state);
}

TEST(run, three_qubit_circuit_final_state) {
    // Two data qubits, marked 01, ancilla last. Ends in -|01> (x) |m>.
    const auto spec = GroverSpec::make(2, bits({"01"}), 1, OracleStyle::McxAncilla);
    const auto out = run(build_grover_circuit(spec), zero_state(3)).final_state;
    EXPECT_TRUE(equal_up_to_global_phase(out, ket_state("01m"), 1e-12));
    EXPECT_NEAR(inner_product(ket_state("01m"), out).real(), -1.0, 1e-12);
}

TEST(run, direct_oracle_one_round_state) {
    // -(1/sqrt2)|001> - (1/2)|ppp>.
    const auto spec = GroverSpec::make(3, bits({"001"}), 1, OracleStyle::MczDirect);
    const auto out = run(build_grover_circuit(spec), zero_state(3)).final_state;
    const Vec want = -ket("001") / std::sqrt(2.0) - 0.5 * ket("ppp");
    EXPECT_TRUE(equal_up_to_global_phase(out, grover::testing::to_state(want), 1e-12));
}

TEST(dense_unitary, single_hadamard) {
    Circuit c(1);
    c.single(GateKind::H, 0);
    const Mat u = dense_unitary(c);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(u(0, 0).real(), r, 1e-15);
    EXPECT_NEAR(u(0, 1).real(), r, 1e-15);
    EXPECT_NEAR(u(1, 0).real(), r, 1e-15);
    EXPECT_NEAR(u(1, 1).real(), -r, 1e-15);
}

TEST(dense_unitary, width_limit) {
    EXPECT_THROW(dense_unitary(Circuit(kMaxDenseQubits + 1)), SizeError);
}

TEST(step_ranges, cover_circuit_contiguously) {
    for (auto style : {OracleStyle::McxAncilla, OracleStyle::MczDirect}) {
        const auto spec = GroverSpec::make(4, bits({"0110", "1111", "0000"}), 3, style);
        const auto c = build_grover_circuit(spec);
        const auto ranges = grover_step_ranges(spec);
        std::size_t pos = 0;
        for (const auto &r : ranges) {
            EXPECT_EQ(r.begin, pos);
            pos = r.end;
        }
        EXPECT_EQ(pos, c.size());
        // prologue 2 + 3 rounds * (3 blocks * 3 + 5)
        EXPECT_EQ(ranges.size(), 2U + 3U * (9U + 5U));
    }
}

// Snapshot-by-step fixtures for the 2+1 qubit ancilla circuit, expressed
// with |p>, |m> kets and expanded independently of the simulator.
TEST(trace, two_data_qubit_ancilla_steps) {
    const auto spec = GroverSpec::make(2, bits({"01"}), 1, OracleStyle::McxAncilla);
    const auto initial = zero_state(3);
    const auto result = run(build_grover_circuit(spec), initial, true);
    const auto ranges = grover_step_ranges(spec);
    const auto states = group_trace(initial, result, ranges);
    ASSERT_EQ(states.size(), 10U);

    const std::vector<std::string> labels{"1.0", "1.1", "2.1", "2.2", "2.3", "3.1", "3.2", "3.3", "3.4", "3.5"};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        EXPECT_EQ(ranges[i].label, labels[i]);
    }

    const Vec m = ket("m");
    auto with_m = [&](const Vec &data) { return grover::testing::kron(data, m).col(0).eval(); };
    const std::vector<Vec> want{
        ket("001"),
        ket("ppm"),
        ket("ppm"),
        ket("ppm") - ket("11m"),
        ket("ppm") - ket("01m"),
        with_m(ket("00") - ket("pm")),
        with_m(ket("11") + ket("pm")),
        with_m(ket("pm")),
        with_m(-ket("pm")),
        with_m(-ket("01")),
    };
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_NEAR(want[i].norm(), 1.0, 1e-12) << "fixture " << i;
        EXPECT_TRUE(equal_up_to_global_phase(states[i], grover::testing::to_state(want[i]), 1e-10)) << "psi" << i;
    }
}

TEST(trace, three_qubit_direct_two_rounds) {
    const auto spec = GroverSpec::make(3, bits({"001"}), 2, OracleStyle::MczDirect);
    const auto initial = zero_state(3);
    const auto result = run(build_grover_circuit(spec), initial, true);
    const auto states = group_trace(initial, result, grover_step_ranges(spec));
    ASSERT_EQ(states.size(), 2U + 8U * 2U);

    const double r = 1.0 / std::sqrt(2.0);
    const double q = 1.0 / (2.0 * std::sqrt(2.0));  // 1/(2 sqrt 2)
    // First round.
    const std::vector<Vec> round1{
        ket("000"),
        ket("ppp"),
        ket("ppp"),
        ket("ppp") - r * ket("111"),
        ket("ppp") - r * ket("001"),
        ket("000") - r * ket("ppm"),
        ket("111") + r * ket("ppm"),
        r * ket("ppm") - 0.5 * ket("111"),
        -r * ket("ppm") - 0.5 * ket("000"),
        -r * ket("001") - 0.5 * ket("ppp"),
    };
    // Second round, starting from the end of the first.
    const std::vector<Vec> round2{
        -r * ket("111") - 0.5 * ket("ppp"),
        -0.5 * ket("ppp") + 3 * q * ket("111"),
        -0.5 * ket("ppp") + 3 * q * ket("001"),
        -0.5 * ket("000") + 3 * q * ket("ppm"),
        -0.5 * ket("111") - 3 * q * ket("ppm"),
        -3 * q * ket("ppm") - 0.25 * ket("111"),
        3 * q * ket("ppm") - 0.25 * ket("000"),
        3 * q * ket("001") - 0.25 * ket("ppp"),
    };
    std::vector<Vec> want = round1;
    want.insert(want.end(), round2.begin(), round2.end());
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_NEAR(want[i].norm(), 1.0, 1e-12) << "fixture " << i;
        EXPECT_TRUE(equal_up_to_global_phase(states[i], grover::testing::to_state(want[i]), 1e-10)) << "step " << i;
    }
    // Exact probabilities after each round.
    EXPECT_NEAR(states[9].probability(1), 25.0 / 32.0, 1e-12);
    EXPECT_NEAR(states.back().probability(1), 121.0 / 128.0, 1e-12);
}
