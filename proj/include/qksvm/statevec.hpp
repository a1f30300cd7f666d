// Copyright 2026 The qksvm Authors
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
 * Dense statevector simulator: exact state evolution and inner products
 * for small qubit counts.
 *
 * Conventions (fixed here, used everywhere else):
 *   - Basis index k encodes qubit 0 as the least-significant bit.
 *   - RZ(t) = diag(e^{-it/2}, e^{it/2}); P(t) = diag(1, e^{it});
 *     RX/RY use the standard half-angle forms.
 *   - For two-qubit gates the first index is the control.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qksvm {

using cdouble = std::complex<double>;

/// Hard cap on simulator width; memory is 2^n amplitudes.
inline constexpr int kMaxQubits = 16;

enum class GateKind { H, RX, RY, RZ, P, CNOT, CZ };

std::string gate_name(GateKind kind);
bool gate_has_angle(GateKind kind);
bool gate_is_two_qubit(GateKind kind);

struct Gate {
    GateKind kind = GateKind::H;
    double angle = 0.0;  // rotation/phase kinds only
    int q0 = 0;          // target of single-qubit kinds, control of two-qubit kinds
    int q1 = -1;         // target of two-qubit kinds

    static Gate h(int q) { return {GateKind::H, 0.0, q, -1}; }
    static Gate rx(int q, double angle) { return {GateKind::RX, angle, q, -1}; }
    static Gate ry(int q, double angle) { return {GateKind::RY, angle, q, -1}; }
    static Gate rz(int q, double angle) { return {GateKind::RZ, angle, q, -1}; }
    static Gate p(int q, double angle) { return {GateKind::P, angle, q, -1}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, 0.0, control, target}; }
    static Gate cz(int control, int target) { return {GateKind::CZ, 0.0, control, target}; }

    bool is_two_qubit() const { return gate_is_two_qubit(kind); }
    bool operator==(const Gate&) const = default;
};

/// 2x2 matrix of a single-qubit kind, row-major.
std::array<cdouble, 4> single_qubit_matrix(GateKind kind, double angle);

/// 4x4 matrix of a two-qubit kind, row-major; local basis index is
/// 2*control_bit + target_bit.
std::array<cdouble, 16> two_qubit_matrix(GateKind kind);

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int n) : n_qubits(n) {}

    /// Validates qubit indices against n_qubits before appending.
    void append(const Gate& gate);
    void append(const Circuit& other);

    bool operator==(const Circuit&) const = default;
};

class Statevector {
  public:
    /// Constructs |0...0>. Throws std::invalid_argument unless 1 <= n_qubits <= kMaxQubits.
    explicit Statevector(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cdouble>& amplitudes() const { return amps_; }
    cdouble amplitude(std::size_t basis_index) const { return amps_.at(basis_index); }

    double norm_squared() const;

    /// In-place gate application by stride iteration over amplitude pairs.
    void apply(const Gate& gate);
    /// Applies gates in sequence order. Throws on qubit-count mismatch.
    void apply(const Circuit& circuit);

    /// Debug dump: JSON array of [re, im] pairs.
    std::string to_json_string() const;

  private:
    int n_qubits_;
    std::vector<cdouble> amps_;
};

Statevector new_zero_state(int n_qubits);

inline Statevector apply_gate(Statevector state, const Gate& gate) {
    state.apply(gate);
    return state;
}

inline Statevector apply_circuit(Statevector state, const Circuit& circuit) {
    state.apply(circuit);
    return state;
}

/// <a|b> = sum_k conj(a_k) * b_k. Throws on dimension mismatch.
cdouble inner_product(const Statevector& a, const Statevector& b);

/// |<a|b>|^2, clamped to [0,1] when roundoff exceeds the bounds by < 1e-9.
double fidelity(const Statevector& a, const Statevector& b);

}  // namespace qksvm
