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

/**
 * @file
 * Two-dimensional picture of Grover search.
 *
 * With N = 2^n basis states of which m are marked, let |beta> be the uniform
 * superposition over the marked states and |alpha> the uniform superposition
 * over the rest. The start state |p>^n lies in span(|alpha>, |beta>) at angle
 * theta from |alpha>, where sin(theta) = sqrt(m/N), and each oracle+diffuser
 * round rotates it by 2*theta inside that plane. After k rounds the marked
 * probability is sin^2((2k+1) theta).
 *
 * The complementary angle theta' = pi/2 - theta (cos(theta') = sqrt(m/N))
 * is carried as well because tables are often printed in that convention;
 * cos^2((2k+1) theta') equals sin^2((2k+1) theta) for integer k.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "grover/circuit.h"
#include "grover/statevector.h"

namespace grover {

struct GroverAngles {
    double theta_sin;    // sin(theta_sin) = sqrt(m / 2^n)
    double theta_cos;  // cos(theta_cos) = sqrt(m / 2^n)
    std::size_t m;
    std::size_t n;
};

/// Throws SpecError unless 1 <= m < 2^n.
GroverAngles grover_angles(std::size_t n, std::size_t m);

/// sin^2((2k+1) theta_sin).
double predicted_success(std::size_t n, std::size_t m, std::size_t k);

/// Probability of each individual unmarked state after k rounds.
double p_each_unmarked(std::size_t n, std::size_t m, std::size_t k);

/// argmax over k >= 0 of predicted_success, checked around the rounded
/// estimate pi/(4 theta) - 1/2 and its two neighbours; smallest k on ties.
std::size_t optimal_iterations(std::size_t n, std::size_t m);

struct PlaneCoords {
    Amplitude a_marked;    // <beta|psi>
    Amplitude a_unmarked;  // <alpha|psi>
    double residual_norm;  // || psi - a_marked |beta> - a_unmarked |alpha> ||
};

PlaneCoords plane_decompose(const StateVector &state, const std::vector<Bitstring> &marked);

/// Angle in [0, pi) of an in-plane state measured from |alpha> toward
/// |beta>. Global phase (including sign) is factored out first, which is
/// why the range is a half turn.
double plane_angle(const PlaneCoords &coords);

/// Coefficients in the non-orthogonal basis (|p>^n, |r>) for a single
/// marked string r: psi ~ c_uniform |p>^n + c_marked |r>. Only meaningful
/// when m = 1 and the residual is negligible.
struct ObliqueCoords {
    Amplitude c_uniform;
    Amplitude c_marked;
};

ObliqueCoords oblique_coords(const PlaneCoords &coords, std::size_t n);

/// Factors `state` as data (x) |m> and returns the data part. Throws
/// InternalError if the last qubit is not |m> to within `tol`.
StateVector strip_ancilla(const StateVector &state, double tol = 1e-10);

/// Data-register state at the end of a run of `spec`'s circuit, ancilla
/// removed when the style uses one.
StateVector data_state(const GroverSpec &spec, const StateVector &full);

/// Total probability on the marked strings of a data-register state.
double marked_probability(const StateVector &data, const std::vector<Bitstring> &marked);

struct IterationRow {
    std::size_t k;
    double angle;             // (2k+1) theta_sin
    double p_marked_sim;      // summed |amp|^2 over marked states, simulated
    double p_marked_formula;  // predicted_success(n, m, k)
    double p_each_unmarked;   // simulated probability of one unmarked state

    bool operator==(const IterationRow &) const = default;
};

inline constexpr std::size_t kMaxReportIterations = 64;

/// Rows for k = 0..k_max. spec.iterations is ignored; the circuit is run
/// one round at a time and measured after each.
std::vector<IterationRow> iteration_report(const GroverSpec &spec, std::size_t k_max);

}  // namespace grover
