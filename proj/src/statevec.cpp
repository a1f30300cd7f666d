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

#include "qksvm/statevec.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qksvm {

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::P: return "P";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
    }
    throw std::invalid_argument("gate_name: unknown gate kind");
}

bool gate_has_angle(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ ||
           kind == GateKind::P;
}

bool gate_is_two_qubit(GateKind kind) {
    return kind == GateKind::CNOT || kind == GateKind::CZ;
}

std::array<cdouble, 4> single_qubit_matrix(GateKind kind, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    switch (kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            return {cdouble(r), cdouble(r), cdouble(r), cdouble(-r)};
        }
        case GateKind::RX:
            return {cdouble(c), cdouble(0, -s), cdouble(0, -s), cdouble(c)};
        case GateKind::RY:
            return {cdouble(c), cdouble(-s), cdouble(s), cdouble(c)};
        case GateKind::RZ:
            return {std::polar(1.0, -angle / 2.0), cdouble(0), cdouble(0),
                    std::polar(1.0, angle / 2.0)};
        case GateKind::P:
            return {cdouble(1), cdouble(0), cdouble(0), std::polar(1.0, angle)};
        default:
            throw std::invalid_argument("single_qubit_matrix: " + gate_name(kind) +
                                        " is not a single-qubit gate");
    }
}

std::array<cdouble, 16> two_qubit_matrix(GateKind kind) {
    std::array<cdouble, 16> m{};
    switch (kind) {
        case GateKind::CNOT:
            // |c t> -> |c, t^c>, local index 2c + t
            m[0 * 4 + 0] = 1;
            m[1 * 4 + 1] = 1;
            m[3 * 4 + 2] = 1;
            m[2 * 4 + 3] = 1;
            return m;
        case GateKind::CZ:
            m[0 * 4 + 0] = 1;
            m[1 * 4 + 1] = 1;
            m[2 * 4 + 2] = 1;
            m[3 * 4 + 3] = -1;
            return m;
        default:
            throw std::invalid_argument("two_qubit_matrix: " + gate_name(kind) +
                                        " is not a two-qubit gate");
    }
}

namespace {

void check_gate_indices(const Gate& gate, int n_qubits) {
    if (gate.q0 < 0 || gate.q0 >= n_qubits) {
        throw std::invalid_argument("gate qubit index " + std::to_string(gate.q0) +
                                    " out of range for " + std::to_string(n_qubits) + " qubits");
    }
    if (gate.is_two_qubit()) {
        if (gate.q1 < 0 || gate.q1 >= n_qubits) {
            throw std::invalid_argument("gate qubit index " + std::to_string(gate.q1) +
                                        " out of range for " + std::to_string(n_qubits) +
                                        " qubits");
        }
        if (gate.q0 == gate.q1) {
            throw std::invalid_argument("two-qubit gate requires distinct qubit indices");
        }
    }
}

}  // namespace

void Circuit::append(const Gate& gate) {
    check_gate_indices(gate, n_qubits);
    gates.push_back(gate);
}

void Circuit::append(const Circuit& other) {
    if (other.n_qubits != n_qubits) {
        throw std::invalid_argument("circuit qubit-count mismatch on append");
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                                    "], got " + std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, cdouble(0));
    amps_[0] = cdouble(1);
}

double Statevector::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    return total;
}

void Statevector::apply(const Gate& gate) {
    check_gate_indices(gate, n_qubits_);
    const std::size_t dim = amps_.size();
    switch (gate.kind) {
        case GateKind::P:
        case GateKind::RZ: {
            // Diagonal kinds touch each amplitude once.
            const auto u = single_qubit_matrix(gate.kind, gate.angle);
            const cdouble d0 = u[0];
            const cdouble d1 = u[3];
            const std::size_t bit = std::size_t{1} << gate.q0;
            for (std::size_t k = 0; k < dim; ++k) {
                amps_[k] *= (k & bit) ? d1 : d0;
            }
            return;
        }
        case GateKind::H:
        case GateKind::RX:
        case GateKind::RY: {
            const auto u = single_qubit_matrix(gate.kind, gate.angle);
            const std::size_t stride = std::size_t{1} << gate.q0;
            for (std::size_t base = 0; base < dim; base += 2 * stride) {
                for (std::size_t k = base; k < base + stride; ++k) {
                    const cdouble a0 = amps_[k];
                    const cdouble a1 = amps_[k + stride];
                    amps_[k] = u[0] * a0 + u[1] * a1;
                    amps_[k + stride] = u[2] * a0 + u[3] * a1;
                }
            }
            return;
        }
        case GateKind::CNOT: {
            const std::size_t cbit = std::size_t{1} << gate.q0;
            const std::size_t tbit = std::size_t{1} << gate.q1;
            for (std::size_t k = 0; k < dim; ++k) {
                if ((k & cbit) && !(k & tbit)) {
                    std::swap(amps_[k], amps_[k | tbit]);
                }
            }
            return;
        }
        case GateKind::CZ: {
            const std::size_t mask =
                (std::size_t{1} << gate.q0) | (std::size_t{1} << gate.q1);
            for (std::size_t k = 0; k < dim; ++k) {
                if ((k & mask) == mask) amps_[k] = -amps_[k];
            }
            return;
        }
    }
    throw std::invalid_argument("apply: unknown gate kind");
}

void Statevector::apply(const Circuit& circuit) {
    if (circuit.n_qubits != n_qubits_) {
        throw std::invalid_argument("circuit is for " + std::to_string(circuit.n_qubits) +
                                    " qubits, state has " + std::to_string(n_qubits_));
    }
    for (const Gate& gate : circuit.gates) apply(gate);
}

std::string Statevector::to_json_string() const {
    std::string out = "[";
    char buf[64];
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "[%.17g,%.17g]", amps_[k].real(), amps_[k].imag());
        if (k) out += ',';
        out += buf;
    }
    out += ']';
    return out;
}

Statevector new_zero_state(int n_qubits) { return Statevector(n_qubits); }

cdouble inner_product(const Statevector& a, const Statevector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    cdouble total(0);
    const auto& av = a.amplitudes();
    const auto& bv = b.amplitudes();
    for (std::size_t k = 0; k < av.size(); ++k) {
        total += std::conj(av[k]) * bv[k];
    }
    return total;
}

double fidelity(const Statevector& a, const Statevector& b) {
    double f = std::norm(inner_product(a, b));
    if (f > 1.0 && f < 1.0 + 1e-9) f = 1.0;
    if (f < 0.0) f = 0.0;
    return f;
}

}  // namespace qksvm
