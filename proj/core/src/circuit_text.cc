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

#include "grover/circuit_text.h"

#include <charconv>
#include <optional>
#include <sstream>

#include "grover/errors.h"

namespace grover {

namespace {

constexpr std::string_view kWidthPragma = "qubits:";

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<Qubit> parse_index(std::string_view s) {
    Qubit v = 0;
    const auto *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return v;
}

struct PendingOp {
    std::size_t line;
    std::string token;
    GateOp op;
};

}  // namespace

std::string format_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "# grover-kit circuit, qubit 0 = leftmost ket character = most significant index bit\n";
    out << "# " << kWidthPragma << ' ' << circuit.n_qubits() << '\n';
    for (const auto &op : circuit.ops()) {
        if (const auto *g = std::get_if<SingleGate>(&op)) {
            out << gate_kind_name(g->kind) << ' ' << g->target << '\n';
        } else {
            const auto &mc = std::get<MultiControlledGate>(op);
            out << (mc.base == ControlledBase::X ? "MCX" : "MCZ") << " c=";
            for (std::size_t i = 0; i < mc.controls.size(); ++i) {
                out << (i ? "," : "") << mc.controls[i];
            }
            out << " t=" << mc.target << '\n';
        }
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    std::optional<std::size_t> declared_width;
    std::size_t declared_line = 0;
    std::size_t max_index = 0;
    bool any_index = false;
    std::vector<PendingOp> pending;

    auto note_index = [&](Qubit q) {
        max_index = any_index ? std::max(max_index, q) : q;
        any_index = true;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        std::string_view body = raw;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
            const auto comment = trim(raw.substr(hash + 1));
            if (comment.starts_with(kWidthPragma)) {
                const auto value = trim(comment.substr(kWidthPragma.size()));
                const auto w = parse_index(value);
                if (!w) {
                    throw ParseError(line_no, std::string(value), "bad qubit count");
                }
                declared_width = *w;
                declared_line = line_no;
            }
            body = raw.substr(0, hash);
        }
        body = trim(body);
        if (body.empty()) {
            continue;
        }

        std::istringstream words{std::string(body)};
        std::string name;
        words >> name;
        std::vector<std::string> args;
        for (std::string w; words >> w;) {
            args.push_back(w);
        }

        if (name == "H" || name == "X" || name == "Z") {
            if (args.size() != 1) {
                throw ParseError(line_no, name, "expected exactly one qubit index");
            }
            const auto q = parse_index(args[0]);
            if (!q) {
                throw ParseError(line_no, args[0], "bad qubit index");
            }
            note_index(*q);
            const GateKind kind = name == "H" ? GateKind::H : name == "X" ? GateKind::X : GateKind::Z;
            pending.push_back({line_no, name, SingleGate{kind, *q}});
        } else if (name == "MCX" || name == "MCZ") {
            std::optional<std::vector<Qubit>> controls;
            std::optional<Qubit> target;
            for (const auto &a : args) {
                if (a.starts_with("c=")) {
                    if (controls) {
                        throw ParseError(line_no, a, "controls given twice");
                    }
                    std::vector<Qubit> cs;
                    std::string_view list = std::string_view(a).substr(2);
                    while (true) {
                        const auto comma = list.find(',');
                        const auto item = list.substr(0, comma);
                        const auto q = parse_index(item);
                        if (!q) {
                            throw ParseError(line_no, a, "bad control list");
                        }
                        note_index(*q);
                        cs.push_back(*q);
                        if (comma == std::string_view::npos) {
                            break;
                        }
                        list = list.substr(comma + 1);
                    }
                    controls = std::move(cs);
                } else if (a.starts_with("t=")) {
                    if (target) {
                        throw ParseError(line_no, a, "target given twice");
                    }
                    const auto q = parse_index(std::string_view(a).substr(2));
                    if (!q) {
                        throw ParseError(line_no, a, "bad target index");
                    }
                    note_index(*q);
                    target = *q;
                } else {
                    throw ParseError(line_no, a, "unexpected argument");
                }
            }
            if (!controls) {
                throw ParseError(line_no, name, "missing controls (c=...)");
            }
            if (!target) {
                throw ParseError(line_no, name, "missing target (t=...)");
            }
            const ControlledBase base = name == "MCX" ? ControlledBase::X : ControlledBase::Z;
            pending.push_back({line_no, name, MultiControlledGate{base, std::move(*controls), *target}});
        } else {
            throw ParseError(line_no, name, "unknown gate");
        }
    }

    if (!declared_width && !any_index) {
        throw ParseError(line_no, "", "no qubit count and no gates");
    }
    const std::size_t width = declared_width.value_or(max_index + 1);
    std::optional<Circuit> circuit;
    try {
        circuit.emplace(width);
    } catch (const SizeError &e) {
        throw ParseError(declared_line, std::to_string(width), e.what());
    }
    for (auto &p : pending) {
        try {
            circuit->append(std::move(p.op));
        } catch (const IndexError &e) {
            throw ParseError(p.line, p.token, e.what());
        }
    }
    return std::move(*circuit);
}

}  // namespace grover
