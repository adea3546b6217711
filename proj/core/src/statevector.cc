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

#include "grover/statevector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "grover/errors.h"

namespace grover {

namespace {

void check_width(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw SizeError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
    }
}

void check_qubit(std::size_t n_qubits, Qubit q) {
    if (q >= n_qubits) {
        throw IndexError("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_qubits) +
                         "-qubit state");
    }
}

}  // namespace

char gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return 'H';
        case GateKind::X:
            return 'X';
        case GateKind::Z:
            return 'Z';
    }
    return '?';
}

Bitstring Bitstring::parse(std::string_view text) {
    if (text.empty()) {
        throw SpecError("empty bitstring");
    }
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw SpecError("bitstring '" + std::string(text) + "' contains characters other than 0/1");
        }
    }
    if (text.size() > 64) {
        throw SpecError("bitstring longer than 64 bits");
    }
    return Bitstring(std::string(text));
}

Bitstring Bitstring::from_index(std::uint64_t index, std::size_t width) {
    if (width == 0 || width > 64 || (width < 64 && (index >> width) != 0)) {
        throw SpecError("index " + std::to_string(index) + " does not fit in " + std::to_string(width) + " bits");
    }
    std::string bits(width, '0');
    for (std::size_t q = 0; q < width; ++q) {
        if ((index >> (width - 1 - q)) & 1U) {
            bits[q] = '1';
        }
    }
    return Bitstring(std::move(bits));
}

std::uint64_t Bitstring::index() const noexcept {
    std::uint64_t v = 0;
    for (char c : bits_) {
        v = (v << 1U) | static_cast<std::uint64_t>(c == '1');
    }
    return v;
}

Bitstring Bitstring::reversed() const {
    return Bitstring(std::string(bits_.rbegin(), bits_.rend()));
}

StateVector StateVector::zero_state(std::size_t n_qubits) {
    return basis_state(n_qubits, 0);
}

StateVector StateVector::basis_state(std::size_t n_qubits, std::uint64_t index) {
    check_width(n_qubits);
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (index >= dim) {
        throw IndexError("basis index " + std::to_string(index) + " out of range");
    }
    std::vector<Amplitude> amps(dim);
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw SizeError("amplitude count " + std::to_string(amps.size()) + " is not a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(amps.size()));
    check_width(n);
    double total = 0;
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError("non-finite amplitude");
        }
        total += std::norm(a);
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw ValidationError("amplitudes not normalized: squared norm " + std::to_string(total));
    }
    return StateVector(n, std::move(amps));
}

Amplitude StateVector::amplitude(const Bitstring &ket) const {
    if (ket.size() != n_qubits_) {
        throw ShapeError("bitstring '" + ket.str() + "' has wrong width for " + std::to_string(n_qubits_) +
                         "-qubit state");
    }
    return amps_[ket.index()];
}

double StateVector::norm_squared() const noexcept {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(), [](const Amplitude &a) { return std::norm(a); });
    return p;
}

void StateVector::apply_single_inplace(GateKind kind, Qubit target) {
    check_qubit(n_qubits_, target);
    const std::uint64_t stride = qubit_mask(n_qubits_, target);
    const std::uint64_t dim = amps_.size();
    // Each pair (i0, i0|stride) is touched exactly once, so the result does
    // not depend on iteration order.
    switch (kind) {
        case GateKind::H: {
            constexpr double s = std::numbers::sqrt2 / 2;
            for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
                for (std::uint64_t i0 = base; i0 < base + stride; ++i0) {
                    const Amplitude v0 = amps_[i0];
                    const Amplitude v1 = amps_[i0 + stride];
                    amps_[i0] = s * (v0 + v1);
                    amps_[i0 + stride] = s * (v0 - v1);
                }
            }
            break;
        }
        case GateKind::X:
            for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
                for (std::uint64_t i0 = base; i0 < base + stride; ++i0) {
                    std::swap(amps_[i0], amps_[i0 + stride]);
                }
            }
            break;
        case GateKind::Z:
            for (std::uint64_t base = stride; base < dim; base += 2 * stride) {
                for (std::uint64_t i1 = base; i1 < base + stride; ++i1) {
                    amps_[i1] = -amps_[i1];
                }
            }
            break;
    }
}

void StateVector::apply_multicontrolled_inplace(ControlledBase base, std::span<const Qubit> controls, Qubit target) {
    if (controls.empty()) {
        throw IndexError("multi-controlled gate needs at least one control");
    }
    check_qubit(n_qubits_, target);
    std::uint64_t control_mask = 0;
    for (Qubit c : controls) {
        check_qubit(n_qubits_, c);
        if (c == target) {
            throw IndexError("control " + std::to_string(c) + " coincides with target");
        }
        const std::uint64_t m = qubit_mask(n_qubits_, c);
        if (control_mask & m) {
            throw IndexError("duplicate control " + std::to_string(c));
        }
        control_mask |= m;
    }
    const std::uint64_t target_mask = qubit_mask(n_qubits_, target);
    const std::uint64_t dim = amps_.size();

    // Enumerate only indices whose control bits are all 1 and target bit is 0:
    // walk the free bits as a counter and scatter them into the free positions.
    const std::uint64_t fixed = control_mask | target_mask;
    const std::uint64_t free_mask = (dim - 1) & ~fixed;
    std::uint64_t free = 0;
    do {
        const std::uint64_t i0 = free | control_mask;
        const std::uint64_t i1 = i0 | target_mask;
        if (base == ControlledBase::X) {
            std::swap(amps_[i0], amps_[i1]);
        } else {
            amps_[i1] = -amps_[i1];
        }
        free = (free - free_mask) & free_mask;
    } while (free != 0);
}

StateVector zero_state(std::size_t n_qubits) {
    return StateVector::zero_state(n_qubits);
}

StateVector apply_single(StateVector state, GateKind kind, Qubit target) {
    state.apply_single_inplace(kind, target);
    return state;
}

StateVector apply_multicontrolled(StateVector state, ControlledBase base, std::span<const Qubit> controls,
                                  Qubit target) {
    state.apply_multicontrolled_inplace(base, controls, target);
    return state;
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw ShapeError("inner product of " + std::to_string(a.n_qubits()) + "- and " +
                         std::to_string(b.n_qubits()) + "-qubit states");
    }
    Amplitude acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    if (a.n_qubits() != b.n_qubits()) {
        return false;
    }
    // The best phase is arg <b|a>; the residual at that phase is
    // ||a||^2 + ||b||^2 - 2 |<b|a>|.
    const Amplitude overlap = inner_product(b, a);
    const double mag = std::abs(overlap);
    const Amplitude c = mag > 0 ? overlap / mag : Amplitude{1.0};
    double dist2 = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dist2 += std::norm(a[i] - c * b[i]);
    }
    return std::sqrt(dist2) <= tol;
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    const std::size_t n = a.n_qubits() + b.n_qubits();
    check_width(n);
    std::vector<Amplitude> amps(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            amps[i * b.size() + j] = a[i] * b[j];
        }
    }
    return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace grover
