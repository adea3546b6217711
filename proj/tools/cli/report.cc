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

#include "cli/report.h"

namespace grover::cli {

using json = nlohmann::ordered_json;

namespace {

json amplitude_json(const Amplitude &a) {
    return json::array({a.real(), a.imag()});
}

Amplitude amplitude_from(const json &j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

void to_json(json &j, const ReportDocument &doc) {
    j = json::object();
    j["command"] = doc.command;
    j["versions"] = {{"tool", doc.tool_version}, {"format", doc.format_version}};
    if (doc.spec) {
        const auto &s = *doc.spec;
        json spec = {{"n", s.n}, {"bit_order", s.bit_order}};
        if (!s.marked.empty()) {
            spec["marked"] = s.marked;
        }
        if (s.m) {
            spec["m"] = *s.m;
        }
        if (s.iterations) {
            spec["iterations"] = *s.iterations;
        }
        if (s.style) {
            spec["style"] = *s.style;
        }
        j["spec"] = std::move(spec);
    }
    if (!doc.rows.empty()) {
        json rows = json::array();
        for (const auto &r : doc.rows) {
            rows.push_back({{"k", r.k},
                            {"angle", r.angle},
                            {"p_marked_sim", r.p_marked_sim},
                            {"p_marked_formula", r.p_marked_formula},
                            {"p_each_unmarked", r.p_each_unmarked}});
        }
        j["rows"] = std::move(rows);
    }
    if (!doc.trace.empty()) {
        json steps = json::array();
        for (const auto &t : doc.trace) {
            json amps = json::array();
            for (const auto &a : t.amplitudes) {
                amps.push_back(amplitude_json(a));
            }
            steps.push_back({{"label", t.label},
                             {"description", t.description},
                             {"iteration", t.iteration},
                             {"block", t.block},
                             {"op_begin", t.op_begin},
                             {"op_end", t.op_end},
                             {"amplitudes", std::move(amps)}});
        }
        j["trace"] = std::move(steps);
    }
    if (doc.histogram) {
        json counts = json::array();
        for (const auto &e : doc.histogram->counts) {
            counts.push_back({{"bitstring", e.bitstring}, {"count", e.count}});
        }
        j["histogram"] = {{"shots", doc.histogram->shots},
                          {"seed", doc.histogram->seed},
                          {"width", doc.histogram->width},
                          {"counts", std::move(counts)}};
    }
    j["results"] = doc.results;
}

void from_json(const json &j, ReportDocument &doc) {
    doc = ReportDocument{};
    doc.command = j.at("command").get<std::string>();
    doc.tool_version = j.at("versions").at("tool").get<std::string>();
    doc.format_version = j.at("versions").at("format").get<std::string>();
    if (j.contains("spec")) {
        const auto &s = j.at("spec");
        SpecEcho echo;
        echo.n = s.at("n").get<std::size_t>();
        echo.bit_order = s.at("bit_order").get<std::string>();
        if (s.contains("marked")) {
            echo.marked = s.at("marked").get<std::vector<std::string>>();
        }
        if (s.contains("m")) {
            echo.m = s.at("m").get<std::size_t>();
        }
        if (s.contains("iterations")) {
            echo.iterations = s.at("iterations").get<std::size_t>();
        }
        if (s.contains("style")) {
            echo.style = s.at("style").get<std::string>();
        }
        doc.spec = std::move(echo);
    }
    if (j.contains("rows")) {
        for (const auto &r : j.at("rows")) {
            doc.rows.push_back(IterationRow{r.at("k").get<std::size_t>(), r.at("angle").get<double>(),
                                            r.at("p_marked_sim").get<double>(),
                                            r.at("p_marked_formula").get<double>(),
                                            r.at("p_each_unmarked").get<double>()});
        }
    }
    if (j.contains("trace")) {
        for (const auto &t : j.at("trace")) {
            TraceStep step{t.at("label").get<std::string>(),
                           t.at("description").get<std::string>(),
                           t.at("iteration").get<std::size_t>(),
                           t.at("block").get<std::size_t>(),
                           t.at("op_begin").get<std::size_t>(),
                           t.at("op_end").get<std::size_t>(),
                           {}};
            for (const auto &a : t.at("amplitudes")) {
                step.amplitudes.push_back(amplitude_from(a));
            }
            doc.trace.push_back(std::move(step));
        }
    }
    if (j.contains("histogram")) {
        const auto &h = j.at("histogram");
        HistogramReport report{h.at("shots").get<std::uint64_t>(), h.at("seed").get<std::uint64_t>(),
                               h.at("width").get<std::size_t>(), {}};
        for (const auto &e : h.at("counts")) {
            report.counts.push_back({e.at("bitstring").get<std::string>(), e.at("count").get<std::uint64_t>()});
        }
        doc.histogram = std::move(report);
    }
    doc.results = j.at("results");
}

}  // namespace grover::cli
