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

#include "grover/sampling.h"

#include <cmath>

#include "grover/circuit.h"
#include "grover/errors.h"
#include "grover/geometry.h"
#include "gtest/gtest.h"
#include "testing/reference.h"

using namespace grover;

namespace {

StateVector five_qubit_final(std::size_t k, OracleStyle style) {
    const auto spec = GroverSpec::make(5, {Bitstring::parse("10100")}, k, style);
    return run(build_grover_circuit(spec), zero_state(spec.width())).final_state;
}

std::uint64_t total(const Histogram &h) {
    std::uint64_t t = 0;
    for (const auto &[key, c] : h.counts) {
        t += c;
    }
    return t;
}

}  // namespace

TEST(binomial_interval, reference_values) {
    // mean 264.5, sd ~ 14.0
    EXPECT_EQ(binomial_interval(0.2583, 1024, 3), (std::pair<std::uint64_t, std::uint64_t>{222, 307}));
    EXPECT_EQ(binomial_interval(529.0 / 2048.0, 1024, 3), (std::pair<std::uint64_t, std::uint64_t>{222, 307}));
    EXPECT_EQ(binomial_interval(1.0, 500, 3), (std::pair<std::uint64_t, std::uint64_t>{500, 500}));
    EXPECT_EQ(binomial_interval(0.0, 500, 3), (std::pair<std::uint64_t, std::uint64_t>{0, 0}));
    EXPECT_EQ(binomial_interval(0.5, 4, 10), (std::pair<std::uint64_t, std::uint64_t>{0, 4}));
    EXPECT_THROW(binomial_interval(1.5, 10, 3), SpecError);
    EXPECT_THROW(binomial_interval(0.5, 0, 3), SpecError);
    EXPECT_THROW(binomial_interval(0.5, 10, 0), SpecError);
}

TEST(measure_all, deterministic_distribution) {
    const auto s = grover::testing::ket_state("01");
    const auto h = measure_all(s, 777, 12345);
    ASSERT_EQ(h.counts.size(), 1U);
    EXPECT_EQ(h.count(Bitstring::parse("01")), 777U);
    EXPECT_EQ(h.shots, 777U);
    EXPECT_EQ(h.seed, 12345U);
}

TEST(measure_all, zero_shots_rejected) {
    EXPECT_THROW(measure_all(zero_state(2), 0, 1), SpecError);
    EXPECT_THROW(measure_all(zero_state(2), 1, 1, 3), SpecError);
}

TEST(measure_all, seed_determinism) {
    const auto s = five_qubit_final(1, OracleStyle::MczDirect);
    EXPECT_EQ(measure_all(s, 5000, 42), measure_all(s, 5000, 42));
    EXPECT_NE(measure_all(s, 5000, 42).counts, measure_all(s, 5000, 43).counts);
}

TEST(measure_all, counts_sum_and_key_width) {
    const auto s = five_qubit_final(2, OracleStyle::McxAncilla);
    const auto h = measure_all(s, 4096, 9, 5);
    EXPECT_EQ(total(h), 4096U);
    EXPECT_EQ(h.width, 5U);
    for (const auto &[key, c] : h.counts) {
        EXPECT_EQ(key.size(), 5U);
        EXPECT_GT(c, 0U);
    }
}

TEST(measure_all, one_and_two_round_intervals) {
    const std::uint64_t seed = 7;
    const auto h1 = measure_all(five_qubit_final(1, OracleStyle::McxAncilla), 1024, seed, 5);
    const auto c1 = h1.count(Bitstring::parse("10100"));
    EXPECT_GE(c1, 222U);
    EXPECT_LE(c1, 307U);
    const auto h2 = measure_all(five_qubit_final(2, OracleStyle::McxAncilla), 1024, seed, 5);
    const auto c2 = h2.count(Bitstring::parse("10100"));
    EXPECT_GE(c2, 569U);
    EXPECT_LE(c2, 663U);
}

TEST(measure_all, three_sigma_coverage_across_seeds) {
    // 400 independent 1024-shot experiments: the 3-sigma band should miss
    // about 0.3% of them; allow up to 2%. The mean count is checked against
    // its own standard error (sd / sqrt(400)).
    const auto s = five_qubit_final(1, OracleStyle::MczDirect);
    const double p = 529.0 / 2048.0;
    const auto [lo, hi] = binomial_interval(p, 1024, 3);
    int misses = 0;
    double sum = 0;
    for (std::uint64_t seed = 1000; seed < 1400; ++seed) {
        const auto c = measure_all(s, 1024, seed).count(Bitstring::parse("10100"));
        misses += (c < lo || c > hi) ? 1 : 0;
        sum += static_cast<double>(c);
    }
    EXPECT_LE(misses, 8);
    const double sd_mean = std::sqrt(1024 * p * (1 - p)) / std::sqrt(400.0);
    EXPECT_NEAR(sum / 400, 1024 * p, 4 * sd_mean);
}

TEST(measure_all, converges_to_exact_probability) {
    const auto s = five_qubit_final(1, OracleStyle::MczDirect);
    const std::uint64_t shots = 1'000'000;
    const auto h = measure_all(s, shots, 31337);
    const auto [lo, hi] = binomial_interval(529.0 / 2048.0, shots, 3);
    const auto c = h.count(Bitstring::parse("10100"));
    EXPECT_GE(c, lo);
    EXPECT_LE(c, hi);
}

TEST(measure_all, qubit_marginals_within_three_sigma) {
    std::mt19937_64 rng(17);
    const auto s = grover::testing::random_state(4, rng);
    const std::uint64_t shots = 200'000;
    const auto h = measure_all(s, shots, 5);
    for (Qubit q = 0; q < 4; ++q) {
        double p_one = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i & qubit_mask(4, q)) {
                p_one += s.probability(i);
            }
        }
        std::uint64_t ones = 0;
        for (const auto &[key, c] : h.counts) {
            if (key.bit(q)) {
                ones += c;
            }
        }
        const auto [lo, hi] = binomial_interval(p_one, shots, 3);
        EXPECT_GE(ones, lo) << "qubit " << q;
        EXPECT_LE(ones, hi) << "qubit " << q;
    }
}

TEST(measure_all, ancilla_marginalized) {
    // |01> (x) |m>: ancilla is 50/50 but keys only see the data register.
    const auto h = measure_all(grover::testing::ket_state("01m"), 1000, 3, 2);
    ASSERT_EQ(h.counts.size(), 1U);
    EXPECT_EQ(h.count(Bitstring::parse("01")), 1000U);
}

TEST(histogram, sorted_by_count_then_key) {
    Histogram h;
    h.shots = 6;
    h.width = 2;
    h.counts = {{Bitstring::parse("11"), 2}, {Bitstring::parse("00"), 2}, {Bitstring::parse("01"), 1},
                {Bitstring::parse("10"), 1}};
    const auto s = h.sorted();
    ASSERT_EQ(s.size(), 4U);
    EXPECT_EQ(s[0].first.str(), "00");
    EXPECT_EQ(s[1].first.str(), "11");
    EXPECT_EQ(s[2].first.str(), "01");
    EXPECT_EQ(s[3].first.str(), "10");
}
