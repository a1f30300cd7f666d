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

#include "qksvm/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qksvm/rng.hpp"

namespace qksvm {

std::string trainer_name(Trainer trainer) {
    return trainer == Trainer::Smo ? "smo" : "sgd";
}

Trainer trainer_from_name(const std::string& name) {
    if (name == "smo") return Trainer::Smo;
    if (name == "sgd") return Trainer::Sgd;
    throw std::invalid_argument("unknown trainer: " + name);
}

namespace {

void validate_binary_problem(const KernelMatrix& K, const std::vector<int>& y,
                             const TrainConfig& cfg) {
    if (static_cast<std::size_t>(K.size()) != y.size()) {
        throw std::invalid_argument("kernel matrix size does not match label count");
    }
    if (y.empty()) throw std::invalid_argument("empty training set");
    if (!(cfg.C > 0.0)) throw std::invalid_argument("C must be > 0");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    bool has_pos = false, has_neg = false;
    for (int label : y) {
        if (label == 1) {
            has_pos = true;
        } else if (label == -1) {
            has_neg = true;
        } else {
            throw std::invalid_argument("binary labels must be +1 or -1, got " +
                                        std::to_string(label));
        }
    }
    if (!has_pos || !has_neg) {
        throw std::invalid_argument("training set must contain both classes");
    }
}

double decision_for_index(const KernelMatrix& K, const std::vector<int>& y,
                          const std::vector<double>& alphas, double bias, std::size_t i) {
    double f = bias;
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        if (alphas[j] != 0.0) f += alphas[j] * y[j] * K.values(j, i);
    }
    return f;
}

/// Bias from free support vectors. Without free support vectors the KKT
/// conditions only pin b to an interval; the midpoint of that interval
/// satisfies every inequality, while averaging bounded-SV residuals can
/// land outside it. Falls back to mean(y) when nothing constrains b.
double recompute_bias(const KernelMatrix& K, const std::vector<int>& y,
                      const std::vector<double>& alphas, double C) {
    const std::size_t m = alphas.size();
    double sum_free = 0.0;
    std::size_t n_free = 0;
    double b_lo = -std::numeric_limits<double>::infinity();
    double b_hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        const double g = decision_for_index(K, y, alphas, 0.0, i);
        const bool at_zero = alphas[i] <= kSupportThreshold;
        const bool at_c = alphas[i] >= C - kSupportThreshold;
        if (!at_zero && !at_c) {
            sum_free += y[i] - g;
            ++n_free;
            continue;
        }
        // alpha=0 requires y(g+b) >= 1, alpha=C requires y(g+b) <= 1
        if (y[i] == 1) {
            if (at_zero) b_lo = std::max(b_lo, 1.0 - g);
            if (at_c) b_hi = std::min(b_hi, 1.0 - g);
        } else {
            if (at_zero) b_hi = std::min(b_hi, -1.0 - g);
            if (at_c) b_lo = std::max(b_lo, -1.0 - g);
        }
    }
    if (n_free > 0) return sum_free / static_cast<double>(n_free);
    if (std::isfinite(b_lo) && std::isfinite(b_hi)) return 0.5 * (b_lo + b_hi);
    if (std::isfinite(b_lo)) return b_lo;
    if (std::isfinite(b_hi)) return b_hi;
    double mean_y = 0.0;
    for (int label : y) mean_y += label;
    return mean_y / static_cast<double>(m);
}

std::vector<std::size_t> collect_support(const std::vector<double>& alphas) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (std::max(alphas[i], 0.0) > kSupportThreshold) support.push_back(i);
    }
    return support;
}

int count_kkt_violations(const KernelMatrix& K, const std::vector<int>& y,
                         const std::vector<double>& alphas, double bias, double C,
                         double tol) {
    int violations = 0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const double margin = y[i] * decision_for_index(K, y, alphas, bias, i);
        if (alphas[i] <= kSupportThreshold) {
            if (margin < 1.0 - tol) ++violations;
        } else if (alphas[i] >= C - kSupportThreshold) {
            if (margin > 1.0 + tol) ++violations;
        } else if (std::abs(margin - 1.0) > tol) {
            ++violations;
        }
    }
    return violations;
}

}  // namespace

double dual_objective(const KernelMatrix& K, const std::vector<int>& y,
                      const std::vector<double>& alphas) {
    const std::size_t m = alphas.size();
    double linear = 0.0, quad = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        linear += alphas[i];
        if (alphas[i] == 0.0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            quad += alphas[i] * alphas[j] * y[i] * y[j] * K.values(i, j);
        }
    }
    return linear - 0.5 * quad;
}

SvmModel train_smo(const KernelMatrix& K, const std::vector<int>& y, const TrainConfig& cfg) {
    validate_binary_problem(K, y, cfg);
    if (cfg.max_passes < 1) throw std::invalid_argument("max_passes must be >= 1");
    const PsdReport psd = psd_report(K);
    if (!psd.is_psd) {
        throw std::invalid_argument("kernel matrix is not PSD within tolerance (min eigenvalue " +
                                    std::to_string(psd.min_eigenvalue) + ")");
    }

    const std::size_t m = y.size();
    const double C = cfg.C;
    std::vector<double> alphas(m, 0.0);
    double bias = 0.0;
    Rng rng(cfg.seed);
    std::vector<double> trace;
    int total_sweeps = 0;
    // Generous cap; desk-scale problems converge orders of magnitude sooner.
    const int sweep_cap = 200 * cfg.max_passes;

    // A second outer round only runs if the averaged bias exposes residual
    // violations, which keeps the returned model KKT-clean at cfg.tol.
    for (int round = 0; round < 3; ++round) {
        int clean_passes = 0;
        while (clean_passes < cfg.max_passes && total_sweeps < sweep_cap) {
            ++total_sweeps;
            int num_changed = 0;
            for (std::size_t i = 0; i < m; ++i) {
                const double error_i =
                    decision_for_index(K, y, alphas, bias, i) - y[i];
                const double r = y[i] * error_i;
                if (!((r < -cfg.tol && alphas[i] < C) || (r > cfg.tol && alphas[i] > 0.0))) {
                    continue;
                }
                // Seeded random partner; the pair is then solved analytically.
                std::size_t j = rng.uniform_index(m - 1);
                if (j >= i) ++j;
                const double error_j =
                    decision_for_index(K, y, alphas, bias, j) - y[j];
                const double ai_old = alphas[i];
                const double aj_old = alphas[j];
                double L, H;
                if (y[i] != y[j]) {
                    L = std::max(0.0, aj_old - ai_old);
                    H = std::min(C, C + aj_old - ai_old);
                } else {
                    L = std::max(0.0, ai_old + aj_old - C);
                    H = std::min(C, ai_old + aj_old);
                }
                if (L >= H) continue;
                const double eta =
                    2.0 * K.values(i, j) - K.values(i, i) - K.values(j, j);
                if (eta >= 0.0) continue;
                double aj_new = aj_old - y[j] * (error_i - error_j) / eta;
                aj_new = std::clamp(aj_new, L, H);
                if (std::abs(aj_new - aj_old) < 1e-10) continue;
                // The pair update keeps a_i inside the box in exact arithmetic;
                // the clamp removes 1e-17-scale rounding excursions.
                const double ai_new =
                    std::clamp(ai_old + y[i] * y[j] * (aj_old - aj_new), 0.0, C);

                const double b1 = bias - error_i - y[i] * (ai_new - ai_old) * K.values(i, i) -
                                  y[j] * (aj_new - aj_old) * K.values(i, j);
                const double b2 = bias - error_j - y[i] * (ai_new - ai_old) * K.values(i, j) -
                                  y[j] * (aj_new - aj_old) * K.values(j, j);
                if (ai_new > 0.0 && ai_new < C) {
                    bias = b1;
                } else if (aj_new > 0.0 && aj_new < C) {
                    bias = b2;
                } else {
                    bias = 0.5 * (b1 + b2);
                }
                alphas[i] = ai_new;
                alphas[j] = aj_new;
                trace.push_back(dual_objective(K, y, alphas));
                ++num_changed;
            }
            clean_passes = (num_changed == 0) ? clean_passes + 1 : 0;
        }
        bias = recompute_bias(K, y, alphas, C);
        if (count_kkt_violations(K, y, alphas, bias, C, cfg.tol) == 0) break;
        if (total_sweeps >= sweep_cap) break;
    }

    SvmModel model;
    model.alphas = std::move(alphas);
    model.labels = y;
    model.bias = bias;
    model.support_indices = collect_support(model.alphas);
    model.C = C;
    model.kernel_descriptor = K.kind;
    model.trainer = "smo";
    model.seed = cfg.seed;
    model.passes_or_epochs = total_sweeps;
    model.dual_objective_trace = std::move(trace);
    return model;
}

SvmModel train_sgd(const KernelMatrix& K, const std::vector<int>& y, const TrainConfig& cfg) {
    validate_binary_problem(K, y, cfg);
    if (!(cfg.learning_rate > 0.0)) {
        throw std::invalid_argument("learning_rate must be > 0");
    }
    if (cfg.epochs < 1) throw std::invalid_argument("epochs must be >= 1");

    const std::size_t m = y.size();
    const double lambda = 1.0 / (cfg.C * static_cast<double>(m));
    const double decay = 1.0 - cfg.learning_rate * lambda;
    // Signed coefficients: beta_i accumulates learning_rate * y_i on each
    // margin violation, so the decision value is sum_j beta_j K_ij.
    std::vector<double> beta(m, 0.0);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(cfg.seed);

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        rng.shuffle(order);
        for (const std::size_t i : order) {
            double f = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                if (beta[j] != 0.0) f += beta[j] * K.values(j, i);
            }
            for (double& b : beta) b *= decay;
            if (y[i] * f < 1.0) beta[i] += cfg.learning_rate * y[i];
        }
    }

    SvmModel model;
    // Stored as alphas_i = beta_i * y_i so the shared decision expansion
    // sum alphas_i y_i k_i reproduces sum beta_i k_i; raw values kept.
    model.alphas.resize(m);
    for (std::size_t i = 0; i < m; ++i) model.alphas[i] = beta[i] * y[i];
    model.labels = y;
    model.bias = 0.0;
    model.support_indices = collect_support(model.alphas);
    model.C = cfg.C;
    model.kernel_descriptor = K.kind;
    model.trainer = "sgd";
    model.seed = cfg.seed;
    model.passes_or_epochs = cfg.epochs;
    return model;
}

double decision_value(const SvmModel& model, std::span<const double> k_row) {
    if (k_row.size() != model.alphas.size()) {
        throw std::invalid_argument("kernel row length " + std::to_string(k_row.size()) +
                                    " does not match training size " +
                                    std::to_string(model.alphas.size()));
    }
    double f = model.bias;
    for (std::size_t i = 0; i < k_row.size(); ++i) {
        f += model.alphas[i] * model.labels[i] * k_row[i];
    }
    return f;
}

std::vector<int> predict(const SvmModel& model, const FeatureMatrix& k_test_rows) {
    std::vector<int> labels;
    labels.reserve(k_test_rows.rows());
    for (Eigen::Index r = 0; r < k_test_rows.rows(); ++r) {
        const double f = decision_value(model, row_span(k_test_rows, r));
        labels.push_back(f >= 0.0 ? 1 : -1);
    }
    return labels;
}

KktReport kkt_report(const SvmModel& model, const KernelMatrix& K, const std::vector<int>& y,
                     const TrainConfig& cfg) {
    if (static_cast<std::size_t>(K.size()) != y.size() || y.size() != model.alphas.size()) {
        throw std::invalid_argument("kkt_report: size mismatch");
    }
    KktReport report;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double margin =
            y[i] * decision_for_index(K, y, model.alphas, model.bias, i);
        double amount = 0.0;
        if (model.alphas[i] <= kSupportThreshold) {
            amount = (1.0 - cfg.tol) - margin;
        } else if (model.alphas[i] >= model.C - kSupportThreshold) {
            amount = margin - (1.0 + cfg.tol);
        } else {
            amount = std::abs(margin - 1.0) - cfg.tol;
        }
        if (amount > 0.0) {
            ++report.violations;
            report.max_violation = std::max(report.max_violation, amount);
        }
    }
    return report;
}

MulticlassModel train_multiclass(const KernelMatrix& K, const std::vector<int>& y,
                                 const TrainConfig& cfg) {
    if (static_cast<std::size_t>(K.size()) != y.size()) {
        throw std::invalid_argument("kernel matrix size does not match label count");
    }
    std::set<int> distinct(y.begin(), y.end());
    if (distinct.size() < 2) {
        throw std::invalid_argument("multiclass training needs at least 2 classes");
    }
    MulticlassModel model;
    model.classes.assign(distinct.begin(), distinct.end());
    for (int cls : model.classes) {
        const auto count = std::count(y.begin(), y.end(), cls);
        if (count < 2) {
            throw std::invalid_argument("class " + std::to_string(cls) +
                                        " has fewer than 2 samples");
        }
    }
    model.per_class.reserve(model.classes.size());
    for (std::size_t ci = 0; ci < model.classes.size(); ++ci) {
        std::vector<int> y_bin(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            y_bin[i] = (y[i] == model.classes[ci]) ? 1 : -1;
        }
        TrainConfig per_class_cfg = cfg;
        per_class_cfg.seed = cfg.seed + ci;
        model.per_class.push_back(per_class_cfg.trainer == Trainer::Smo
                                      ? train_smo(K, y_bin, per_class_cfg)
                                      : train_sgd(K, y_bin, per_class_cfg));
    }
    return model;
}

std::vector<int> predict_multiclass(const MulticlassModel& model,
                                    const FeatureMatrix& k_test_rows) {
    if (model.per_class.empty()) throw std::invalid_argument("empty multiclass model");
    std::vector<int> labels;
    labels.reserve(k_test_rows.rows());
    for (Eigen::Index r = 0; r < k_test_rows.rows(); ++r) {
        const auto row = row_span(k_test_rows, r);
        std::size_t best = 0;
        double best_value = decision_value(model.per_class[0], row);
        for (std::size_t ci = 1; ci < model.per_class.size(); ++ci) {
            const double v = decision_value(model.per_class[ci], row);
            if (v > best_value) {
                best_value = v;
                best = ci;
            }
        }
        labels.push_back(model.classes[best]);
    }
    return labels;
}

}  // namespace qksvm
