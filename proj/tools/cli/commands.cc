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

#include "cli/commands.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "grover/circuit_text.h"
#include "grover/errors.h"
#include "grover/geometry.h"
#include "grover/sampling.h"

namespace grover::cli {

using json = nlohmann::ordered_json;

namespace {

const char *style_name(OracleStyle s) {
    return s == OracleStyle::McxAncilla ? "mcx-ancilla" : "mcz-direct";
}

const char *bit_order_name(BitOrder b) {
    return b == BitOrder::Lsb ? "lsb" : "msb";
}

// Internal (msb-first) bitstring to its I/O spelling.
std::string show(const Bitstring &b, BitOrder order) {
    return order == BitOrder::Lsb ? b.reversed().str() : b.str();
}

json amp_json(const Amplitude &a) {
    return json::array({a.real(), a.imag()});
}

SpecEcho echo_of(const GroverSpec &spec, BitOrder order, std::optional<std::size_t> iterations) {
    SpecEcho e;
    e.n = spec.n;
    for (const auto &r : spec.marked) {
        e.marked.push_back(show(r, order));
    }
    e.m = spec.marked.size();
    e.iterations = iterations;
    e.style = style_name(spec.style);
    e.bit_order = bit_order_name(order);
    return e;
}

std::string fixed(double v, int precision) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision) << v;
    return s.str();
}

std::string complex_text(const Amplitude &a, int precision) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision) << a.real() << (a.imag() < 0 ? " - " : " + ")
      << std::abs(a.imag()) << "i";
    return s.str();
}

void render_table(const ReportDocument &doc, int precision, std::ostream &out) {
    const auto &r = doc.results;
    // dump prints bare circuit text so it can be piped straight into load.
    if (r.contains("circuit")) {
        out << r.at("circuit").get<std::string>();
        return;
    }
    if (doc.spec) {
        out << "command: " << doc.command << "  n=" << doc.spec->n;
        if (doc.spec->m) {
            out << "  m=" << *doc.spec->m;
        }
        if (doc.spec->iterations) {
            out << "  iterations=" << *doc.spec->iterations;
        }
        if (doc.spec->style) {
            out << "  style=" << *doc.spec->style;
        }
        out << "  bit-order=" << doc.spec->bit_order << "\n";
    } else {
        out << "command: " << doc.command << "\n";
    }

    const BitOrder order = doc.spec && doc.spec->bit_order == "lsb" ? BitOrder::Lsb : BitOrder::Msb;
    for (const auto &t : doc.trace) {
        out << "[iter " << t.iteration << "] step " << t.label << "  " << t.description << "  (ops " << t.op_begin
            << ".." << t.op_end << ")\n";
        const std::size_t width = static_cast<std::size_t>(std::countr_zero(t.amplitudes.size()));
        for (std::size_t i = 0; i < t.amplitudes.size(); ++i) {
            if (std::norm(t.amplitudes[i]) > 1e-24) {
                out << "    |" << show(Bitstring::from_index(i, width), order) << ">  "
                    << complex_text(t.amplitudes[i], precision) << "\n";
            }
        }
    }

    if (!doc.rows.empty()) {
        out << std::left << std::setw(4) << "k" << std::setw(precision + 6) << "angle" << std::setw(precision + 6)
            << "p_sim" << std::setw(precision + 6) << "p_formula"
            << "p_each_unmarked\n";
        for (const auto &row : doc.rows) {
            out << std::left << std::setw(4) << row.k << std::setw(precision + 6) << fixed(row.angle, precision)
                << std::setw(precision + 6) << fixed(row.p_marked_sim, precision) << std::setw(precision + 6)
                << fixed(row.p_marked_formula, precision) << fixed(row.p_each_unmarked, precision) << "\n";
        }
    }

    if (doc.histogram) {
        out << "shots=" << doc.histogram->shots << "  seed=" << doc.histogram->seed << "\n";
        for (const auto &e : doc.histogram->counts) {
            out << "  " << e.bitstring << "  " << e.count << "\n";
        }
    }

    for (const auto &[key, value] : r.items()) {
        if (value.is_number_float()) {
            out << key << ": " << fixed(value.get<double>(), precision) << "\n";
        } else if (value.is_object() && !value.empty() && value.begin()->is_number_float()) {
            out << key << ":\n";
            for (const auto &[k2, v2] : value.items()) {
                out << "  " << k2 << ": " << fixed(v2.get<double>(), precision) << "\n";
            }
        } else if (value.is_object() && key == "plane") {
            out << "plane:\n";
            for (const auto &[k2, v2] : value.items()) {
                if (v2.is_array()) {
                    out << "  " << k2 << ": " << complex_text({v2.at(0).get<double>(), v2.at(1).get<double>()}, precision)
                        << "\n";
                } else if (v2.is_number()) {
                    out << "  " << k2 << ": " << fixed(v2.get<double>(), precision) << "\n";
                } else if (v2.is_object()) {
                    out << "  " << k2 << ":\n";
                    for (const auto &[k3, v3] : v2.items()) {
                        out << "    " << k3 << ": "
                            << complex_text({v3.at(0).get<double>(), v3.at(1).get<double>()}, precision) << "\n";
                    }
                } else {
                    out << "  " << k2 << ": " << v2.dump() << "\n";
                }
            }
        } else if (value.is_string()) {
            out << key << ": " << value.get<std::string>() << "\n";
        } else {
            out << key << ": " << value.dump() << "\n";
        }
    }
}

void render_csv(const ReportDocument &doc, int precision, std::ostream &out) {
    const auto &r = doc.results;
    if (doc.command == "sweep") {
        out << kSweepCsvHeader << "\n";
        for (const auto &row : doc.rows) {
            out << row.k << ',' << fixed(row.angle, precision) << ',' << fixed(row.p_marked_sim, precision) << ','
                << fixed(row.p_marked_formula, precision) << ',' << fixed(row.p_each_unmarked, precision) << "\n";
        }
    } else if (doc.command == "sample") {
        out << "bitstring,count\n";
        for (const auto &e : doc.histogram->counts) {
            out << e.bitstring << ',' << e.count << "\n";
        }
    } else if (doc.command == "predict") {
        out << "n,m,k,p_success,p_each_unmarked\n";
        out << doc.spec->n << ',' << *doc.spec->m << ',' << r.at("k").get<std::size_t>() << ','
            << fixed(r.at("p_success").get<double>(), precision) << ','
            << fixed(r.at("p_each_unmarked").get<double>(), precision) << "\n";
    } else if (doc.command == "dump") {
        out << "op_index,gate,controls,target\n";
        std::size_t i = 0;
        for (const auto &op : r.at("ops")) {
            out << i++ << ',' << op.at("gate").get<std::string>() << ',';
            const auto &cs = op.at("controls");
            for (std::size_t c = 0; c < cs.size(); ++c) {
                out << (c ? ";" : "") << cs.at(c).get<std::size_t>();
            }
            out << ',' << op.at("target").get<std::size_t>() << "\n";
        }
    } else if (!doc.trace.empty()) {
        out << "step,iteration,block,op_begin,op_end,bitstring,re,im,probability\n";
        const BitOrder order = doc.spec && doc.spec->bit_order == "lsb" ? BitOrder::Lsb : BitOrder::Msb;
        for (const auto &t : doc.trace) {
            const std::size_t width = static_cast<std::size_t>(std::countr_zero(t.amplitudes.size()));
            for (std::size_t i = 0; i < t.amplitudes.size(); ++i) {
                out << t.label << ',' << t.iteration << ',' << t.block << ',' << t.op_begin << ',' << t.op_end << ','
                    << show(Bitstring::from_index(i, width), order) << ',' << fixed(t.amplitudes[i].real(), precision) << ','
                    << fixed(t.amplitudes[i].imag(), precision) << ','
                    << fixed(std::norm(t.amplitudes[i]), precision) << "\n";
            }
        }
    } else {
        // run and load: one probability per reported bitstring.
        out << "bitstring,probability\n";
        const auto &probs = doc.command == "run" ? r.at("p_marked") : r.at("probabilities");
        for (const auto &[k, v] : probs.items()) {
            out << k << ',' << fixed(v.get<double>(), precision) << "\n";
        }
    }
}

std::uint64_t parse_seed(const std::string &text, const std::string &source) {
    std::uint64_t v = 0;
    const auto *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ValidationError(source + ": '" + text + "' is not an unsigned 64-bit integer");
    }
    return v;
}

std::string read_all(std::istream &in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

GroverSpec make_spec(const ProblemOptions &opts) {
    if (opts.n < 2 || opts.n > kMaxQubits) {
        throw ValidationError("--n: " + std::to_string(opts.n) + " outside [2, " + std::to_string(kMaxQubits) + "]");
    }
    if (opts.marked.empty()) {
        throw ValidationError("--marked: at least one bitstring is required");
    }
    std::vector<Bitstring> marked;
    for (const auto &text : opts.marked) {
        Bitstring b;
        try {
            b = Bitstring::parse(text);
        } catch (const SpecError &) {
            throw ValidationError("--marked: '" + text + "' is not a bitstring over {0,1}");
        }
        if (b.size() != opts.n) {
            throw ValidationError("--marked: '" + text + "' has length " + std::to_string(b.size()) +
                                  " but --n is " + std::to_string(opts.n));
        }
        marked.push_back(opts.bit_order == BitOrder::Lsb ? b.reversed() : b);
    }
    try {
        return GroverSpec::make(opts.n, std::move(marked), opts.iterations, opts.style);
    } catch (const SpecError &e) {
        throw ValidationError(std::string("--marked/--n: ") + e.what());
    }
}

ReportDocument cmd_run(const ProblemOptions &opts, bool trace) {
    const GroverSpec spec = make_spec(opts);
    const Circuit circuit = build_grover_circuit(spec);
    const StateVector initial = zero_state(spec.width());
    const RunResult result = run(circuit, initial, trace);
    const StateVector data = data_state(spec, result.final_state);

    ReportDocument doc;
    doc.command = trace ? "trace" : "run";
    doc.spec = echo_of(spec, opts.bit_order, spec.iterations);

    json per_marked = json::object();
    for (const auto &r : spec.marked) {
        per_marked[show(r, opts.bit_order)] = std::norm(data.amplitude(r));
    }
    const auto angles = grover_angles(spec.n, spec.marked.size());
    const auto plane = plane_decompose(data, spec.marked);
    json plane_json = {{"a_marked", amp_json(plane.a_marked)},
                       {"a_unmarked", amp_json(plane.a_unmarked)},
                       {"residual_norm", plane.residual_norm},
                       {"angle", plane_angle(plane)}};
    if (spec.marked.size() == 1) {
        const auto ob = oblique_coords(plane, spec.n);
        plane_json["oblique"] = {{"c_uniform", amp_json(ob.c_uniform)}, {"c_marked", amp_json(ob.c_marked)}};
    }
    doc.results["p_marked_total"] = marked_probability(data, spec.marked);
    doc.results["p_marked"] = std::move(per_marked);
    doc.results["p_predicted"] = predicted_success(spec.n, spec.marked.size(), spec.iterations);
    doc.results["theta_sin"] = angles.theta_sin;
    doc.results["theta_cos"] = angles.theta_cos;
    doc.results["angle"] = static_cast<double>(2 * spec.iterations + 1) * angles.theta_sin;
    doc.results["plane"] = std::move(plane_json);

    if (trace) {
        const auto ranges = grover_step_ranges(spec);
        const auto states = group_trace(initial, result, ranges);
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            const auto &rg = ranges[i];
            doc.trace.push_back(TraceStep{rg.label, rg.description, rg.iteration, rg.block, rg.begin, rg.end,
                                          {states[i].amplitudes().begin(), states[i].amplitudes().end()}});
        }
    }
    return doc;
}

ReportDocument cmd_sweep(const ProblemOptions &opts, std::size_t k_max) {
    if (k_max > kMaxReportIterations) {
        throw ValidationError("--kmax: " + std::to_string(k_max) + " exceeds " + std::to_string(kMaxReportIterations));
    }
    const GroverSpec spec = make_spec(opts);
    ReportDocument doc;
    doc.command = "sweep";
    doc.spec = echo_of(spec, opts.bit_order, std::nullopt);
    doc.rows = iteration_report(spec, k_max);
    double worst = 0;
    for (const auto &row : doc.rows) {
        worst = std::max(worst, std::abs(row.p_marked_sim - row.p_marked_formula));
    }
    doc.results["k_max"] = k_max;
    doc.results["max_sim_formula_gap"] = worst;
    return doc;
}

ReportDocument cmd_predict(std::size_t n, std::size_t m, std::optional<std::size_t> iterations, bool optimal) {
    if (n < 1 || n > 63) {
        throw ValidationError("--n: " + std::to_string(n) + " outside [1, 63]");
    }
    if (m < 1 || m >= (std::uint64_t{1} << n)) {
        throw ValidationError("--m: " + std::to_string(m) + " outside [1, 2^n - 1]");
    }
    if (optimal == iterations.has_value()) {
        throw ValidationError("predict: give exactly one of --iterations or --optimal");
    }
    const std::size_t k = optimal ? optimal_iterations(n, m) : *iterations;
    const auto angles = grover_angles(n, m);

    ReportDocument doc;
    doc.command = "predict";
    SpecEcho echo;
    echo.n = n;
    echo.m = m;
    echo.iterations = k;
    doc.spec = echo;
    doc.results["optimal"] = optimal;
    doc.results["k"] = k;
    doc.results["theta_sin"] = angles.theta_sin;
    doc.results["theta_cos"] = angles.theta_cos;
    doc.results["angle"] = static_cast<double>(2 * k + 1) * angles.theta_sin;
    doc.results["p_success"] = predicted_success(n, m, k);
    doc.results["p_each_unmarked"] = p_each_unmarked(n, m, k);
    return doc;
}

ReportDocument cmd_sample(const ProblemOptions &opts, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw ValidationError("--shots: must be at least 1");
    }
    const GroverSpec spec = make_spec(opts);
    const StateVector final_state = run(build_grover_circuit(spec), zero_state(spec.width())).final_state;
    const StateVector data = data_state(spec, final_state);
    const Histogram h = measure_all(final_state, shots, seed, spec.n);

    ReportDocument doc;
    doc.command = "sample";
    doc.spec = echo_of(spec, opts.bit_order, spec.iterations);

    HistogramReport report{h.shots, h.seed, h.width, {}};
    for (const auto &[key, count] : h.counts) {
        report.counts.push_back({show(key, opts.bit_order), count});
    }
    std::stable_sort(report.counts.begin(), report.counts.end(), [](const auto &a, const auto &b) {
        return a.count != b.count ? a.count > b.count : a.bitstring < b.bitstring;
    });
    doc.histogram = std::move(report);

    const double p_exact = marked_probability(data, spec.marked);
    std::uint64_t hits = 0;
    json per_marked = json::object();
    for (const auto &r : spec.marked) {
        hits += h.count(r);
        per_marked[show(r, opts.bit_order)] = h.count(r);
    }
    const auto [lo, hi] = binomial_interval(p_exact, shots, 3.0);
    doc.results["p_marked_exact"] = p_exact;
    doc.results["marked_counts"] = std::move(per_marked);
    doc.results["marked_total_count"] = hits;
    doc.results["interval_3sigma"] = json::array({lo, hi});
    return doc;
}

ReportDocument cmd_dump(const ProblemOptions &opts) {
    const GroverSpec spec = make_spec(opts);
    const Circuit circuit = build_grover_circuit(spec);
    ReportDocument doc;
    doc.command = "dump";
    doc.spec = echo_of(spec, opts.bit_order, spec.iterations);
    json ops = json::array();
    for (const auto &op : circuit.ops()) {
        if (const auto *g = std::get_if<SingleGate>(&op)) {
            ops.push_back({{"gate", std::string(1, gate_kind_name(g->kind))},
                           {"controls", json::array()},
                           {"target", g->target}});
        } else {
            const auto &mc = std::get<MultiControlledGate>(op);
            ops.push_back({{"gate", mc.base == ControlledBase::X ? "MCX" : "MCZ"},
                           {"controls", mc.controls},
                           {"target", mc.target}});
        }
    }
    doc.results["n_qubits"] = circuit.n_qubits();
    doc.results["ops"] = std::move(ops);
    doc.results["circuit"] = format_circuit(circuit);
    return doc;
}

ReportDocument cmd_load(const std::string &circuit_text, BitOrder bit_order) {
    const Circuit circuit = parse_circuit(circuit_text);
    const StateVector final_state = run(circuit, zero_state(circuit.n_qubits())).final_state;
    ReportDocument doc;
    doc.command = "load";
    json probs = json::object();
    for (std::size_t i = 0; i < final_state.size(); ++i) {
        const double p = final_state.probability(i);
        if (p > 1e-24) {
            probs[show(Bitstring::from_index(i, circuit.n_qubits()), bit_order)] = p;
        }
    }
    doc.results["n_qubits"] = circuit.n_qubits();
    doc.results["op_count"] = circuit.size();
    doc.results["bit_order"] = bit_order_name(bit_order);
    doc.results["probabilities"] = std::move(probs);
    return doc;
}

void render(const ReportDocument &doc, OutputFormat format, int precision, std::ostream &out) {
    switch (format) {
        case OutputFormat::Json: {
            json j = doc;
            out << j.dump(2) << "\n";
            break;
        }
        case OutputFormat::Csv:
            render_csv(doc, precision, out);
            break;
        case OutputFormat::Table:
            render_table(doc, precision, out);
            break;
    }
}

std::uint64_t default_seed() {
    if (const char *env = std::getenv(kSeedEnvVar); env != nullptr) {
        return parse_seed(env, kSeedEnvVar);
    }
    return kDefaultSeed;
}

int run_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"grover-kit: Grover search statevector simulator and analysis toolkit", "grover-kit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    ProblemOptions problem;
    std::string style = "mcz-direct";
    std::string bit_order = "msb";
    std::string format = "table";
    int precision = 6;
    bool trace = false;
    std::size_t k_max = 0;
    std::size_t m = 0;
    std::optional<std::size_t> predict_iterations;
    bool optimal = false;
    std::uint64_t shots = 1024;
    std::optional<std::string> seed_text;
    std::string load_path;
    std::string output_path;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--precision", precision, "Decimal places for table/csv output")
            ->check(CLI::Range(0, 17))
            ->capture_default_str();
        sub->add_option("--bit-order", bit_order, "Bitstring order in all I/O: msb (qubit 0 leftmost) or lsb")
            ->check(CLI::IsMember({"msb", "lsb"}))
            ->capture_default_str();
    };
    auto add_problem = [&](CLI::App *sub, bool with_iterations) {
        sub->add_option("--n", problem.n, "Number of data qubits")->required();
        sub->add_option("--marked", problem.marked, "Marked bitstring(s), repeat or comma-separate")
            ->required()
            ->delimiter(',');
        if (with_iterations) {
            sub->add_option("--iterations", problem.iterations, "Grover iterations")->capture_default_str();
        }
        sub->add_option("--style", style, "Oracle style")
            ->check(CLI::IsMember({"mcz-direct", "mcx-ancilla"}))
            ->capture_default_str();
        add_common(sub);
    };

    auto *run_cmd = app.add_subcommand("run", "Simulate a Grover circuit and report success probabilities");
    add_problem(run_cmd, true);
    run_cmd->add_flag("--trace", trace, "Include per-step state snapshots");

    auto *trace_cmd = app.add_subcommand("trace", "Same as run --trace");
    add_problem(trace_cmd, true);

    auto *sweep_cmd = app.add_subcommand("sweep", "Simulated and closed-form probabilities for k = 0..kmax");
    add_problem(sweep_cmd, false);
    sweep_cmd->add_option("--kmax", k_max, "Largest iteration count")->required();

    auto *predict_cmd = app.add_subcommand("predict", "Closed-form success probability, no simulation");
    predict_cmd->add_option("--n", problem.n, "Number of data qubits")->required();
    predict_cmd->add_option("--m", m, "Number of marked states")->required();
    auto *iter_opt = predict_cmd->add_option("--iterations", predict_iterations, "Grover iterations");
    auto *opt_flag = predict_cmd->add_flag("--optimal", optimal, "Use the best iteration count");
    iter_opt->excludes(opt_flag);
    add_common(predict_cmd);

    auto *sample_cmd = app.add_subcommand("sample", "Measure the final state into a shot histogram");
    add_problem(sample_cmd, true);
    sample_cmd->add_option("--shots", shots, "Number of shots")->capture_default_str();
    sample_cmd->add_option("--seed", seed_text, "PRNG seed (default: $GROVER_KIT_SEED, else 7)");

    auto *dump_cmd = app.add_subcommand("dump", "Print the compiled circuit in text form");
    add_problem(dump_cmd, true);
    dump_cmd->add_option("--output", output_path, "Write the circuit text to this file instead of stdout");

    auto *load_cmd = app.add_subcommand("load", "Parse a circuit text file and run it from |0...0>");
    load_cmd->add_option("file", load_path, "Circuit file, or - for stdin")->required();
    add_common(load_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion &) {
        out << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    problem.style = style == "mcx-ancilla" ? OracleStyle::McxAncilla : OracleStyle::MczDirect;
    problem.bit_order = bit_order == "lsb" ? BitOrder::Lsb : BitOrder::Msb;
    const OutputFormat fmt = format == "json" ? OutputFormat::Json
                             : format == "csv" ? OutputFormat::Csv
                                               : OutputFormat::Table;

    try {
        ReportDocument doc;
        if (run_cmd->parsed()) {
            doc = cmd_run(problem, trace);
        } else if (trace_cmd->parsed()) {
            doc = cmd_run(problem, true);
        } else if (sweep_cmd->parsed()) {
            doc = cmd_sweep(problem, k_max);
        } else if (predict_cmd->parsed()) {
            doc = cmd_predict(problem.n, m, predict_iterations, optimal);
        } else if (sample_cmd->parsed()) {
            const std::uint64_t seed = seed_text ? parse_seed(*seed_text, "--seed") : default_seed();
            doc = cmd_sample(problem, shots, seed);
        } else if (dump_cmd->parsed()) {
            doc = cmd_dump(problem);
            if (!output_path.empty()) {
                std::ofstream file(output_path);
                if (!file) {
                    throw ValidationError("--output: cannot open '" + output_path + "'");
                }
                file << doc.results.at("circuit").get<std::string>();
                return 0;
            }
        } else if (load_cmd->parsed()) {
            std::string text;
            if (load_path == "-") {
                text = read_all(std::cin);
            } else {
                std::ifstream file(load_path);
                if (!file) {
                    throw ValidationError("load: cannot open '" + load_path + "'");
                }
                text = read_all(file);
            }
            doc = cmd_load(text, problem.bit_order);
        }
        render(doc, fmt, precision, out);
        return 0;
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace grover::cli
