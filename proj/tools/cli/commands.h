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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/report.h"
#include "grover/circuit.h"

namespace grover::cli {

enum class BitOrder { Msb, Lsb };
enum class OutputFormat { Table, Json, Csv };

inline constexpr const char *kSeedEnvVar = "GROVER_KIT_SEED";
inline constexpr std::uint64_t kDefaultSeed = 7;

struct ProblemOptions {
    std::size_t n = 0;
    std::vector<std::string> marked;  // as typed, in `bit_order`
    std::size_t iterations = 1;
    OracleStyle style = OracleStyle::MczDirect;
    BitOrder bit_order = BitOrder::Msb;
};

/// Validates flags into a GroverSpec. Errors name the offending flag.
GroverSpec make_spec(const ProblemOptions &opts);

ReportDocument cmd_run(const ProblemOptions &opts, bool trace);
ReportDocument cmd_sweep(const ProblemOptions &opts, std::size_t k_max);
ReportDocument cmd_predict(std::size_t n, std::size_t m, std::optional<std::size_t> iterations, bool optimal);
ReportDocument cmd_sample(const ProblemOptions &opts, std::uint64_t shots, std::uint64_t seed);
ReportDocument cmd_dump(const ProblemOptions &opts);
/// Parses circuit text and runs it from |0...0>.
ReportDocument cmd_load(const std::string &circuit_text, BitOrder bit_order);

/// Writes `doc` to `out` in the requested format. `precision` applies to
/// table and CSV output; JSON carries full double precision.
void render(const ReportDocument &doc, OutputFormat format, int precision, std::ostream &out);

/// Seed from GROVER_KIT_SEED when set, else kDefaultSeed.
std::uint64_t default_seed();

/// Full command-line entry point; `args` excludes argv[0]. Returns the process exit code:
/// 0 success, 2 usage or validation error, 1 internal error.
int run_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace grover::cli
