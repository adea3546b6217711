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

#include <algorithm>
#include <cmath>
#include <random>

#include "grover/errors.h"

namespace grover {

std::vector<std::pair<Bitstring, std::uint64_t>> Histogram::sorted() const {
    std::vector<std::pair<Bitstring, std::uint64_t>> out(counts.begin(), counts.end());
    std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.second > b.second; });
    return out;
}

Histogram measure_all(const StateVector &state, std::uint64_t shots, std::uint64_t seed,
                      std::optional<std::size_t> data_qubits) {
    if (shots == 0) {
        throw SpecError("shots must be at least 1");
    }
    const std::size_t n = state.n_qubits();
    const std::size_t width = data_qubits.value_or(n);
    if (width < 1 || width > n) {
        throw SpecError("data qubit count " + std::to_string(width) + " outside [1, " + std::to_string(n) + "]");
    }
    const std::size_t dropped = n - width;

    std::vector<double> cdf(state.size());
    double running = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const double p = std::norm(state[i]);
        running += p;
        cdf[i] = running;
        if (p > 0) {
            last_nonzero = i;
        }
    }
    const double total = running;

    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> tally(std::size_t{1} << width, 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        idx = std::min(idx, last_nonzero);
        ++tally[idx >> dropped];
    }

    Histogram h{shots, seed, width, {}};
    for (std::size_t key = 0; key < tally.size(); ++key) {
        if (tally[key] != 0) {
            h.counts.emplace(Bitstring::from_index(key, width), tally[key]);
        }
    }
    return h;
}

std::pair<std::uint64_t, std::uint64_t> binomial_interval(double p, std::uint64_t shots, double z) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw SpecError("probability outside [0, 1]");
    }
    if (shots == 0 || !(z > 0)) {
        throw SpecError("binomial interval needs shots >= 1 and z > 0");
    }
    const double N = static_cast<double>(shots);
    const double mean = N * p;
    const double sd = std::sqrt(N * p * (1.0 - p));
    const double lo = std::clamp(std::floor(mean - z * sd), 0.0, N);
    const double hi = std::clamp(std::ceil(mean + z * sd), 0.0, N);
    return {static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)};
}

}  // namespace grover
