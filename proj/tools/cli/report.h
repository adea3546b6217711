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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grover/geometry.h"
#include "json.hpp"

namespace grover::cli {

inline constexpr const char *kToolVersion = "0.1.0";
inline constexpr const char *kFormatVersion = "1";

/// Echo of the problem a command was asked to solve. Bitstrings are in the
/// requested output bit order.
struct SpecEcho {
    std::size_t n = 0;
    std::vector<std::string> marked;
    std::optional<std::size_t> m;
    std::optional<std::size_t> iterations;
    std::optional<std::string> style;
    std::string bit_order = "msb";

    bool operator==(const SpecEcho &) const = default;
};

struct TraceStep {
    std::string label;
    std::string description;
    std::size_t iteration = 0;
    std::size_t block = 0;
    std::size_t op_begin = 0;
    std::size_t op_end = 0;
    std::vector<Amplitude> amplitudes;  // full register, index order

    bool operator==(const TraceStep &) const = default;
};

struct HistogramEntry {
    std::string bitstring;
    std::uint64_t count = 0;

    bool operator==(const HistogramEntry &) const = default;
};

struct HistogramReport {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::size_t width = 0;
    std::vector<HistogramEntry> counts;  // descending count, then lexicographic

    bool operator==(const HistogramReport &) const = default;
};

struct ReportDocument {
    std::string command;
    std::optional<SpecEcho> spec;
    std::vector<IterationRow> rows;
    std::vector<TraceStep> trace;
    std::optional<HistogramReport> histogram;
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    std::string tool_version = kToolVersion;
    std::string format_version = kFormatVersion;

    bool operator==(const ReportDocument &) const = default;
};

void to_json(nlohmann::ordered_json &j, const ReportDocument &doc);
void from_json(const nlohmann::ordered_json &j, ReportDocument &doc);

/// CSV column list for `sweep`.
inline constexpr const char *kSweepCsvHeader = "k,angle,p_marked_sim,p_marked_formula,p_each_unmarked";

}  // namespace grover::cli
