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

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "grover/statevector.h"

namespace grover {

struct Histogram {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::size_t width = 0;  // key length (data qubits)
    std::map<Bitstring, std::uint64_t> counts;

    std::uint64_t count(const Bitstring &key) const {
        const auto it = counts.find(key);
        return it == counts.end() ? 0 : it->second;
    }
    /// Entries by descending count, ties broken lexicographically.
    std::vector<std::pair<Bitstring, std::uint64_t>> sorted() const;

    bool operator==(const Histogram &) const = default;
};

/// Draws `shots` independent computational-basis outcomes from |amp_i|^2.
///
/// Keys keep only the leading `data_qubits` qubits (default: all); trailing
/// qubits, such as an ancilla at the last index, are marginalized.
///
/// Uses std::mt19937_64 seeded with `seed`, 53-bit uniform doubles built
/// from the top bits of each draw, and inverse-CDF lookup by binary search.
/// Same (state, shots, seed) gives the same histogram.
Histogram measure_all(const StateVector &state, std::uint64_t shots, std::uint64_t seed,
                      std::optional<std::size_t> data_qubits = std::nullopt);

/// [floor(N p - z sd), ceil(N p + z sd)] clamped to [0, N], sd = sqrt(N p (1-p)).
std::pair<std::uint64_t, std::uint64_t> binomial_interval(double p, std::uint64_t shots, double z);

}  // namespace grover
