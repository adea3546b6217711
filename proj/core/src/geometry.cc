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

#include "grover/geometry.h"

#include <cmath>
#include <numbers>

#include "grover/errors.h"

namespace grover {

namespace {

std::uint64_t space_size(std::size_t n) {
    if (n < 1 || n > 63) {
        throw SpecError("qubit count " + std::to_string(n) + " outside [1, 63]");
    }
    return std::uint64_t{1} << n;
}

// Marks which basis indices are in the marked set.
std::vector<bool> marked_mask(std::size_t n, const std::vector<Bitstring> &marked) {
    const auto sorted = validate_marked(n, marked);
    std::vector<bool> mask(std::size_t{1} << n, false);
    for (const auto &r : sorted) {
        mask[r.index()] = true;
    }
    return mask;
}

}  // namespace

GroverAngles grover_angles(std::size_t n, std::size_t m) {
    const auto N = space_size(n);
    if (m < 1 || m >= N) {
        throw SpecError("marked count " + std::to_string(m) + " outside [1, " + std::to_string(N - 1) + "]");
    }
    const double ratio = std::sqrt(static_cast<double>(m) / static_cast<double>(N));
    const double theta = std::asin(ratio);
    return GroverAngles{theta, std::numbers::pi / 2 - theta, m, n};
}

double predicted_success(std::size_t n, std::size_t m, std::size_t k) {
    const auto angles = grover_angles(n, m);
    const double s = std::sin(static_cast<double>(2 * k + 1) * angles.theta_sin);
    return s * s;
}

double p_each_unmarked(std::size_t n, std::size_t m, std::size_t k) {
    const double p = predicted_success(n, m, k);
    return (1.0 - p) / static_cast<double>(space_size(n) - m);
}

std::size_t optimal_iterations(std::size_t n, std::size_t m) {
    const auto angles = grover_angles(n, m);
    const double estimate = std::round(std::numbers::pi / (4 * angles.theta_sin) - 0.5);
    const auto centre = static_cast<std::size_t>(std::max(0.0, estimate));
    std::size_t best = centre > 0 ? centre - 1 : 0;
    double best_p = predicted_success(n, m, best);
    for (std::size_t k = best + 1; k <= centre + 1; ++k) {
        const double p = predicted_success(n, m, k);
        if (p > best_p) {
            best = k;
            best_p = p;
        }
    }
    return best;
}

PlaneCoords plane_decompose(const StateVector &state, const std::vector<Bitstring> &marked) {
    const std::size_t n = state.n_qubits();
    const auto mask = marked_mask(n, marked);
    const double m = static_cast<double>(marked.size());
    const double rest = static_cast<double>(state.size()) - m;

    Amplitude sum_marked = 0;
    Amplitude sum_unmarked = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        (mask[i] ? sum_marked : sum_unmarked) += state[i];
    }
    PlaneCoords c{sum_marked / std::sqrt(m), sum_unmarked / std::sqrt(rest), 0.0};

    // Projections onto |beta>, |alpha> have constant entries on each class.
    const Amplitude beta_entry = c.a_marked / std::sqrt(m);
    const Amplitude alpha_entry = c.a_unmarked / std::sqrt(rest);
    double residual2 = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        residual2 += std::norm(state[i] - (mask[i] ? beta_entry : alpha_entry));
    }
    c.residual_norm = std::sqrt(residual2);
    return c;
}

double plane_angle(const PlaneCoords &coords) {
    const Amplitude &ref = std::abs(coords.a_unmarked) >= std::abs(coords.a_marked) ? coords.a_unmarked
                                                                                    : coords.a_marked;
    const double mag = std::abs(ref);
    if (mag == 0) {
        throw ValidationError("state has no component in the marked/unmarked plane");
    }
    const Amplitude phase = std::conj(ref / mag);
    const double x = (coords.a_unmarked * phase).real();
    const double y = (coords.a_marked * phase).real();
    double angle = std::atan2(y, x);
    angle = std::fmod(angle, std::numbers::pi);
    if (angle < 0) {
        angle += std::numbers::pi;
    }
    return angle;
}

ObliqueCoords oblique_coords(const PlaneCoords &coords, std::size_t n) {
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(space_size(n)));
    const Amplitude c_uniform = coords.a_unmarked / std::sqrt(1.0 - inv_sqrt_n * inv_sqrt_n);
    return ObliqueCoords{c_uniform, coords.a_marked - c_uniform * inv_sqrt_n};
}

StateVector strip_ancilla(const StateVector &state, double tol) {
    if (state.n_qubits() < 2) {
        throw InternalError("no ancilla to strip from a 1-qubit state");
    }
    const double r = std::numbers::sqrt2 / 2;
    const std::size_t half = state.size() / 2;
    std::vector<Amplitude> data(half);
    double residual2 = 0;
    for (std::size_t j = 0; j < half; ++j) {
        data[j] = r * (state[2 * j] - state[2 * j + 1]);
        residual2 += std::norm(state[2 * j] - r * data[j]) + std::norm(state[2 * j + 1] + r * data[j]);
    }
    if (std::sqrt(residual2) > tol) {
        throw InternalError("ancilla did not factor as |m>: residual " + std::to_string(std::sqrt(residual2)));
    }
    return StateVector::from_amplitudes(std::move(data));
}

StateVector data_state(const GroverSpec &spec, const StateVector &full) {
    if (full.n_qubits() != spec.width()) {
        throw ShapeError("state width " + std::to_string(full.n_qubits()) + " does not match spec width " +
                         std::to_string(spec.width()));
    }
    return spec.style == OracleStyle::McxAncilla ? strip_ancilla(full) : full;
}

double marked_probability(const StateVector &data, const std::vector<Bitstring> &marked) {
    double p = 0;
    for (const auto &r : marked) {
        p += std::norm(data.amplitude(r));
    }
    return p;
}

std::vector<IterationRow> iteration_report(const GroverSpec &spec, std::size_t k_max) {
    if (k_max > kMaxReportIterations) {
        throw SpecError("k_max " + std::to_string(k_max) + " exceeds " + std::to_string(kMaxReportIterations));
    }
    const auto checked = GroverSpec::make(spec.n, spec.marked, 0, spec.style);
    const std::size_t m = checked.marked.size();
    const auto angles = grover_angles(checked.n, m);

    std::uint64_t first_unmarked = 0;
    for (const auto &r : checked.marked) {
        if (r.index() == first_unmarked) {
            ++first_unmarked;
        }
    }

    Circuit round = compile_phase_oracle(checked.n, checked.marked, checked.style);
    round.append(compile_diffuser(checked.n, checked.width()));

    StateVector state = run(compile_prologue(checked.n, checked.style), zero_state(checked.width())).final_state;
    std::vector<IterationRow> rows;
    rows.reserve(k_max + 1);
    for (std::size_t k = 0; k <= k_max; ++k) {
        if (k > 0) {
            state = run(round, std::move(state)).final_state;
        }
        const StateVector data = data_state(checked, state);
        rows.push_back(IterationRow{k, static_cast<double>(2 * k + 1) * angles.theta_sin,
                                    marked_probability(data, checked.marked), predicted_success(checked.n, m, k),
                                    data.probability(first_unmarked)});
    }
    return rows;
}

}  // namespace grover
