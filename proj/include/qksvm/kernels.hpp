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
 * Fidelity-based quantum kernels and classical kernels, Gram matrix
 * assembly, and spectrum validation.
 */

#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>

#include "qksvm/featuremap.hpp"

namespace qksvm {

/// Feature matrices are row-major so a sample is a contiguous span.
using FeatureMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline std::span<const double> row_span(const FeatureMatrix& X, Eigen::Index i) {
    return {X.data() + i * X.cols(), static_cast<std::size_t>(X.cols())};
}

enum class ClassicalKind { Linear, Poly, Rbf, Sigmoid };

std::string classical_kind_name(ClassicalKind kind);
ClassicalKind classical_kind_from_name(const std::string& name);

struct ClassicalKernelParams {
    ClassicalKind kind = ClassicalKind::Rbf;
    double gamma = 1.0;  // > 0
    int degree = 3;      // poly only, >= 1
    double coef0 = 0.0;  // poly, sigmoid

    bool operator==(const ClassicalKernelParams&) const = default;
};

/// Feature-count heuristic used when no gamma is given.
inline double default_gamma(int d) { return 1.0 / static_cast<double>(d); }

struct KernelMatrix {
    Eigen::MatrixXd values;  // m x m, symmetric
    std::string kind;        // descriptor of the producing kernel

    Eigen::Index size() const { return values.rows(); }
    double operator()(Eigen::Index i, Eigen::Index j) const { return values(i, j); }
};

std::string kernel_descriptor(const FeatureMapConfig& config);
std::string kernel_descriptor(const ClassicalKernelParams& params);

/// fidelity(encode(xi), encode(xj)); in [0, 1].
double quantum_kernel(std::span<const double> xi, std::span<const double> xj,
                      const FeatureMapConfig& config);

/// Encodes all m states once, then fills the upper triangle with pairwise
/// fidelities and mirrors it; the diagonal is set to exactly 1. Cells are
/// independent, so the fill runs on `n_workers` threads (0 = hardware
/// default) with bit-identical results for any worker count.
KernelMatrix quantum_gram(const FeatureMatrix& X, const FeatureMapConfig& config,
                          unsigned n_workers = 0);

/// linear: xi.xj; poly: (gamma xi.xj + coef0)^degree; rbf: exp(-gamma |xi-xj|^2);
/// sigmoid: tanh(gamma xi.xj + coef0).
double classical_kernel(std::span<const double> xi, std::span<const double> xj,
                        const ClassicalKernelParams& params);

KernelMatrix classical_gram(const FeatureMatrix& X, const ClassicalKernelParams& params,
                            unsigned n_workers = 0);

/// Rectangular block K(A_i, B_j) used for test-against-train predictions.
FeatureMatrix cross_gram(const FeatureMatrix& A, const FeatureMatrix& B,
                         const FeatureMapConfig& config);
FeatureMatrix cross_gram(const FeatureMatrix& A, const FeatureMatrix& B,
                         const ClassicalKernelParams& params);

struct PsdReport {
    double min_eigenvalue = 0.0;
    bool is_psd = false;
};

/// Minimum eigenvalue via a symmetric eigensolver; is_psd iff
/// min_eigenvalue >= -1e-9 * m. Throws if K is asymmetric beyond 1e-9.
PsdReport psd_report(const KernelMatrix& K);

}  // namespace qksvm
