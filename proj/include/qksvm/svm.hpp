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
 * SVM training on precomputed kernel matrices: a simplified SMO dual solver,
 * a kernelized hinge-loss SGD trainer, and a one-vs-rest multiclass wrapper.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qksvm/kernels.hpp"

namespace qksvm {

enum class Trainer { Smo, Sgd };

std::string trainer_name(Trainer trainer);
Trainer trainer_from_name(const std::string& name);

struct TrainConfig {
    double C = 1.0;
    double tol = 1e-3;
    int max_passes = 50;  // smo: consecutive sweeps without an update before stopping
    std::uint64_t seed = 0;
    Trainer trainer = Trainer::Smo;
    double learning_rate = 0.1;  // sgd only
    int epochs = 100;            // sgd only
};

/// Coefficients below this are not counted as support vectors.
inline constexpr double kSupportThreshold = 1e-8;

struct SvmModel {
    std::vector<double> alphas;  // dual coefficients; may carry raw SGD values
    std::vector<int> labels;     // +-1
    double bias = 0.0;
    std::vector<std::size_t> support_indices;
    double C = 1.0;
    std::string kernel_descriptor;

    // Trainer provenance.
    std::string trainer;
    std::uint64_t seed = 0;
    int passes_or_epochs = 0;

    // SMO diagnostic: dual objective after each successful pair update.
    std::vector<double> dual_objective_trace;

    std::size_t n_train() const { return alphas.size(); }
};

struct MulticlassModel {
    std::vector<int> classes;          // distinct labels, ascending
    std::vector<SvmModel> per_class;   // one binary model per class (class vs rest)
};

struct KktReport {
    int violations = 0;
    double max_violation = 0.0;
};

/// Simplified SMO with seeded second-index selection. The returned model
/// satisfies 0 <= alpha_i <= C exactly and |sum alpha_i y_i| <= 1e-6; the
/// bias is averaged over free support vectors (all support vectors when no
/// free ones exist, mean(y) when there are no support vectors at all).
SvmModel train_smo(const KernelMatrix& K, const std::vector<int>& y, const TrainConfig& cfg);

/// Kernelized hinge-loss subgradient descent (Pegasos-style): per visited
/// sample every coefficient decays by (1 - learning_rate*lambda) with
/// lambda = 1/(C*m), and a margin violation adds learning_rate to the
/// violator's coefficient. Sample order is a seeded shuffle per epoch.
/// Stored alphas are the raw accumulated coefficients (clamped to >= 0 only
/// for the support-index report); bias stays 0.
SvmModel train_sgd(const KernelMatrix& K, const std::vector<int>& y, const TrainConfig& cfg);

/// sum_i alphas_i * labels_i * k_row_i + bias.
double decision_value(const SvmModel& model, std::span<const double> k_row);

/// Sign of the decision value per row; an exact zero maps to +1.
std::vector<int> predict(const SvmModel& model, const FeatureMatrix& k_test_rows);

/// Counts KKT violations at cfg.tol:
///   alpha_i = 0      requires y_i f_i >= 1 - tol
///   0 < alpha_i < C  requires |y_i f_i - 1| <= tol
///   alpha_i = C      requires y_i f_i <= 1 + tol
KktReport kkt_report(const SvmModel& model, const KernelMatrix& K, const std::vector<int>& y,
                     const TrainConfig& cfg);

/// One-vs-rest: one binary model per class (that class = +1). Every class
/// needs at least 2 samples. Per-class models draw independent seeds
/// (cfg.seed + class index) so training order cannot change results.
MulticlassModel train_multiclass(const KernelMatrix& K, const std::vector<int>& y,
                                 const TrainConfig& cfg);

/// argmax over per-class decision values; ties break to the lowest class.
std::vector<int> predict_multiclass(const MulticlassModel& model,
                                    const FeatureMatrix& k_test_rows);

/// Dual objective sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij.
double dual_objective(const KernelMatrix& K, const std::vector<int>& y,
                      const std::vector<double>& alphas);

}  // namespace qksvm
