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
 * Dense statevector and the H/X/Z and multi-controlled X/Z kernels.
 *
 * Qubit ordering is msb-first: qubit 0 is the leftmost character of a ket
 * string such as |10100> and the most significant bit of the amplitude
 * index. This is the reverse of Qiskit, where qubit 0 is the least
 * significant bit; reverse the bitstring when comparing against Qiskit
 * histograms.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grover {

using Amplitude = std::complex<double>;
using Qubit = std::size_t;

/// Largest register the dense representation accepts (2^26 amplitudes, 1 GiB).
inline constexpr std::size_t kMaxQubits = 26;

enum class GateKind : std::uint8_t { H, X, Z };
enum class ControlledBase : std::uint8_t { X, Z };

char gate_kind_name(GateKind kind);

/// Computational basis label, msb-first (qubit 0 leftmost).
class Bitstring {
   public:
    Bitstring() = default;

    /// Parses a string over {0,1}. Throws SpecError on any other character
    /// or on an empty string.
    static Bitstring parse(std::string_view text);
    static Bitstring from_index(std::uint64_t index, std::size_t width);

    std::size_t size() const noexcept {
        return bits_.size();
    }
    bool bit(Qubit q) const {
        return bits_.at(q) == '1';
    }
    std::uint64_t index() const noexcept;
    const std::string &str() const noexcept {
        return bits_;
    }
    Bitstring reversed() const;

    auto operator<=>(const Bitstring &) const = default;

   private:
    explicit Bitstring(std::string bits) : bits_(std::move(bits)) {
    }
    std::string bits_;
};

class StateVector {
   public:
    /// |0...0> on n qubits, 1 <= n <= kMaxQubits.
    static StateVector zero_state(std::size_t n_qubits);
    /// Basis ket |index> on n qubits.
    static StateVector basis_state(std::size_t n_qubits, std::uint64_t index);
    /// Takes ownership of explicit amplitudes. The length must be a power of
    /// two, every component finite and the squared norm 1 within 1e-9.
    static StateVector from_amplitudes(std::vector<Amplitude> amps);

    std::size_t n_qubits() const noexcept {
        return n_qubits_;
    }
    std::size_t size() const noexcept {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    const Amplitude &operator[](std::uint64_t index) const {
        return amps_[index];
    }
    Amplitude amplitude(const Bitstring &ket) const;

    double norm_squared() const noexcept;
    double probability(std::uint64_t index) const {
        return std::norm(amps_.at(index));
    }
    std::vector<double> probabilities() const;

    // In-place kernels. run() and the free functions below are built on these.
    void apply_single_inplace(GateKind kind, Qubit target);
    void apply_multicontrolled_inplace(ControlledBase base, std::span<const Qubit> controls, Qubit target);

    bool operator==(const StateVector &) const = default;

   private:
    StateVector(std::size_t n_qubits, std::vector<Amplitude> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {
    }

    std::size_t n_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

/// Bit mask of qubit `q` within an index over `n_qubits` (msb-first).
constexpr std::uint64_t qubit_mask(std::size_t n_qubits, Qubit q) noexcept {
    return std::uint64_t{1} << (n_qubits - 1 - q);
}

StateVector zero_state(std::size_t n_qubits);
StateVector apply_single(StateVector state, GateKind kind, Qubit target);
StateVector apply_multicontrolled(StateVector state, ControlledBase base, std::span<const Qubit> controls,
                                  Qubit target);

/// <a|b> = sum conj(a_i) b_i. Throws ShapeError on width mismatch.
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// True iff some unit-modulus c gives ||a - c b|| <= tol.
bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol);

/// |a> (x) |b>, with a's qubits first.
StateVector tensor(const StateVector &a, const StateVector &b);

}  // namespace grover
