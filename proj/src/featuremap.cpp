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

#include "qksvm/featuremap.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace qksvm {

std::string entanglement_name(Entanglement scheme) {
    switch (scheme) {
        case Entanglement::None: return "none";
        case Entanglement::Linear: return "linear";
        case Entanglement::Full: return "full";
    }
    throw std::invalid_argument("entanglement_name: unknown scheme");
}

Entanglement entanglement_from_name(const std::string& name) {
    if (name == "none") return Entanglement::None;
    if (name == "linear") return Entanglement::Linear;
    if (name == "full") return Entanglement::Full;
    throw std::invalid_argument("unknown entanglement scheme: " + name);
}

std::vector<std::pair<int, int>> entanglement_pairs(Entanglement scheme, int n_qubits) {
    std::vector<std::pair<int, int>> pairs;
    switch (scheme) {
        case Entanglement::None:
            break;
        case Entanglement::Linear:
            for (int i = 0; i + 1 < n_qubits; ++i) pairs.emplace_back(i, i + 1);
            break;
        case Entanglement::Full:
            for (int i = 0; i < n_qubits; ++i)
                for (int j = i + 1; j < n_qubits; ++j) pairs.emplace_back(i, j);
            break;
    }
    return pairs;
}

namespace {

void validate(std::span<const double> x, const FeatureMapConfig& config) {
    if (config.n_qubits < 1 || config.n_qubits > kMaxQubits) {
        throw std::invalid_argument("feature map n_qubits out of range");
    }
    if (config.reps < 1 || config.reps > kMaxReps) {
        throw std::invalid_argument("feature map reps must be in [1, " +
                                    std::to_string(kMaxReps) + "]");
    }
    if (config.pair_phase != "zz_standard") {
        throw std::invalid_argument("unknown pair_phase function: " + config.pair_phase);
    }
    if (static_cast<int>(x.size()) != config.n_qubits) {
        throw std::invalid_argument("feature vector length " + std::to_string(x.size()) +
                                    " does not match n_qubits " +
                                    std::to_string(config.n_qubits));
    }
    for (double v : x) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite feature value");
    }
}

}  // namespace

Circuit build_feature_circuit(std::span<const double> x, const FeatureMapConfig& config) {
    validate(x, config);
    constexpr double pi = std::numbers::pi;
    const auto pairs = entanglement_pairs(config.entanglement, config.n_qubits);

    Circuit circuit(config.n_qubits);
    for (int rep = 0; rep < config.reps; ++rep) {
        for (int q = 0; q < config.n_qubits; ++q) circuit.append(Gate::h(q));
        for (int q = 0; q < config.n_qubits; ++q) circuit.append(Gate::p(q, 2.0 * x[q]));
        for (const auto& [i, j] : pairs) {
            circuit.append(Gate::cnot(i, j));
            circuit.append(Gate::p(j, 2.0 * (pi - x[i]) * (pi - x[j])));
            circuit.append(Gate::cnot(i, j));
        }
    }
    return circuit;
}

Statevector encode(std::span<const double> x, const FeatureMapConfig& config) {
    return apply_circuit(new_zero_state(config.n_qubits), build_feature_circuit(x, config));
}

Circuit bell_circuit() {
    Circuit circuit(2);
    circuit.append(Gate::h(0));
    circuit.append(Gate::cnot(0, 1));
    return circuit;
}

std::string circuit_diagram(const Circuit& circuit) {
    std::vector<std::string> wires(circuit.n_qubits);
    for (int q = 0; q < circuit.n_qubits; ++q) {
        wires[q] = "q" + std::to_string(q) + ": ";
    }
    // Keep wires aligned by padding every column to a common width.
    auto pad_to = [&](std::size_t width) {
        for (auto& w : wires)
            while (w.size() < width) w += '-';
    };
    std::size_t width = 0;
    for (const auto& w : wires) width = std::max(width, w.size());
    pad_to(width);

    char buf[48];
    for (const Gate& gate : circuit.gates) {
        if (gate.is_two_qubit()) {
            wires[gate.q0] += gate.kind == GateKind::CNOT ? "--o--" : "--*--";
            std::snprintf(buf, sizeof(buf), "-[%s]-",
                          gate.kind == GateKind::CNOT ? "X" : "Z");
            wires[gate.q1] += buf;
        } else if (gate_has_angle(gate.kind)) {
            std::snprintf(buf, sizeof(buf), "-[%s(%.4g)]-", gate_name(gate.kind).c_str(),
                          gate.angle);
            wires[gate.q0] += buf;
        } else {
            wires[gate.q0] += "-[" + gate_name(gate.kind) + "]-";
        }
        width = 0;
        for (const auto& w : wires) width = std::max(width, w.size());
        pad_to(width);
    }
    std::string out;
    for (const auto& w : wires) {
        out += w;
        out += '\n';
    }
    return out;
}

}  // namespace qksvm
