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
 * Data-dependent encoding circuits: a second-order (ZZ-style) feature map
 * with a switchable entangling layer, plus the Bell reference circuit.
 *
 * Phase convention (single source of truth): per repetition the circuit is
 * H on every qubit, then P(2*x_i) on qubit i, then for each pair (i,j) of
 * the entanglement scheme the sandwich CNOT(i->j), P(2*(pi-x_i)*(pi-x_j))
 * on j, CNOT(i->j). Scheme `linear` pairs nearest neighbours (0,1),(1,2),...;
 * `full` pairs all i<j.
 */

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qksvm/statevec.hpp"

namespace qksvm {

enum class Entanglement { None, Linear, Full };

std::string entanglement_name(Entanglement scheme);
Entanglement entanglement_from_name(const std::string& name);

inline constexpr int kMaxReps = 8;

struct FeatureMapConfig {
    int n_qubits = 2;  // equals the feature dimension it encodes
    int reps = 1;      // circuit depth
    Entanglement entanglement = Entanglement::Linear;
    std::string pair_phase = "zz_standard";

    bool operator==(const FeatureMapConfig&) const = default;
};

/// Qubit pairs visited by the entangling layer, in application order.
std::vector<std::pair<int, int>> entanglement_pairs(Entanglement scheme, int n_qubits);

/// Encoding circuit U(x) (or U_e(x) when the entangling layer is enabled).
/// Throws std::invalid_argument on length mismatch or non-finite features.
Circuit build_feature_circuit(std::span<const double> x, const FeatureMapConfig& config);

/// apply_circuit(new_zero_state(n), build_feature_circuit(x, config)).
Statevector encode(std::span<const double> x, const FeatureMapConfig& config);

/// 2-qubit reference fixture [H(0), CNOT(0->1)]; maps |00> to (|00>+|11>)/sqrt(2).
Circuit bell_circuit();

/// Text diagram of a circuit, one wire per line.
std::string circuit_diagram(const Circuit& circuit);

}  // namespace qksvm
