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

#include "qksvm/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qksvm {

std::string classical_kind_name(ClassicalKind kind) {
    switch (kind) {
        case ClassicalKind::Linear: return "linear";
        case ClassicalKind::Poly: return "poly";
        case ClassicalKind::Rbf: return "rbf";
        case ClassicalKind::Sigmoid: return "sigmoid";
    }
    throw std::invalid_argument("classical_kind_name: unknown kind");
}

ClassicalKind classical_kind_from_name(const std::string& name) {
    if (name == "linear") return ClassicalKind::Linear;
    if (name == "poly") return ClassicalKind::Poly;
    if (name == "rbf") return ClassicalKind::Rbf;
    if (name == "sigmoid") return ClassicalKind::Sigmoid;
    throw std::invalid_argument("unknown classical kernel kind: " + name);
}

std::string kernel_descriptor(const FeatureMapConfig& config) {
    return "quantum;n_qubits=" + std::to_string(config.n_qubits) +
           ";reps=" + std::to_string(config.reps) +
           ";entanglement=" + entanglement_name(config.entanglement) +
           ";pair_phase=" + config.pair_phase;
}

std::string kernel_descriptor(const ClassicalKernelParams& params) {
    char buf[128];
    switch (params.kind) {
        case ClassicalKind::Linear:
            return "classical;kind=linear";
        case ClassicalKind::Poly:
            std::snprintf(buf, sizeof(buf), "classical;kind=poly;gamma=%.17g;degree=%d;coef0=%.17g",
                          params.gamma, params.degree, params.coef0);
            return buf;
        case ClassicalKind::Rbf:
            std::snprintf(buf, sizeof(buf), "classical;kind=rbf;gamma=%.17g", params.gamma);
            return buf;
        case ClassicalKind::Sigmoid:
            std::snprintf(buf, sizeof(buf), "classical;kind=sigmoid;gamma=%.17g;coef0=%.17g",
                          params.gamma, params.coef0);
            return buf;
    }
    throw std::invalid_argument("kernel_descriptor: unknown kind");
}

double quantum_kernel(std::span<const double> xi, std::span<const double> xj,
                      const FeatureMapConfig& config) {
    if (xi.size() != xj.size()) {
        throw std::invalid_argument("quantum_kernel: dimension mismatch");
    }
    return fidelity(encode(xi, config), encode(xj, config));
}

namespace {

void validate_params(const ClassicalKernelParams& params) {
    if (!(params.gamma > 0.0)) throw std::invalid_argument("kernel gamma must be > 0");
    if (params.degree < 1) throw std::invalid_argument("poly degree must be >= 1");
}

/// Runs fn(i) for i in [0, count) across workers; cells written are disjoint.
void parallel_for(Eigen::Index count, unsigned n_workers,
                  const std::function<void(Eigen::Index)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    if (n_workers == 0) n_workers = hw ? hw : 1;
    if (n_workers <= 1 || count < 2) {
        for (Eigen::Index i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) {
        workers.emplace_back([&, w] {
            for (Eigen::Index i = w; i < count; i += n_workers) fn(i);
        });
    }
    for (auto& t : workers) t.join();
}

}  // namespace

KernelMatrix quantum_gram(const FeatureMatrix& X, const FeatureMapConfig& config,
                          unsigned n_workers) {
    const Eigen::Index m = X.rows();
    if (m < 1) throw std::invalid_argument("quantum_gram: empty dataset");
    if (X.cols() != config.n_qubits) {
        throw std::invalid_argument("quantum_gram: feature dimension " +
                                    std::to_string(X.cols()) + " != n_qubits " +
                                    std::to_string(config.n_qubits));
    }

    // O(m) circuit simulations, cached; fidelities are then cheap dot products.
    std::vector<Statevector> states;
    states.reserve(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        states.push_back(encode(row_span(X, i), config));
    }

    KernelMatrix K{Eigen::MatrixXd(m, m), kernel_descriptor(config)};
    parallel_for(m, n_workers, [&](Eigen::Index i) {
        K.values(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < m; ++j) {
            const double f = fidelity(states[i], states[j]);
            K.values(i, j) = f;
            K.values(j, i) = f;
        }
    });
    return K;
}

double classical_kernel(std::span<const double> xi, std::span<const double> xj,
                        const ClassicalKernelParams& params) {
    if (xi.size() != xj.size()) {
        throw std::invalid_argument("classical_kernel: dimension mismatch");
    }
    validate_params(params);
    switch (params.kind) {
        case ClassicalKind::Linear: {
            double dot = 0.0;
            for (std::size_t k = 0; k < xi.size(); ++k) dot += xi[k] * xj[k];
            return dot;
        }
        case ClassicalKind::Poly: {
            double dot = 0.0;
            for (std::size_t k = 0; k < xi.size(); ++k) dot += xi[k] * xj[k];
            return std::pow(params.gamma * dot + params.coef0, params.degree);
        }
        case ClassicalKind::Rbf: {
            double dist2 = 0.0;
            for (std::size_t k = 0; k < xi.size(); ++k) {
                const double d = xi[k] - xj[k];
                dist2 += d * d;
            }
            return std::exp(-params.gamma * dist2);
        }
        case ClassicalKind::Sigmoid: {
            double dot = 0.0;
            for (std::size_t k = 0; k < xi.size(); ++k) dot += xi[k] * xj[k];
            return std::tanh(params.gamma * dot + params.coef0);
        }
    }
    throw std::invalid_argument("classical_kernel: unknown kind");
}

KernelMatrix classical_gram(const FeatureMatrix& X, const ClassicalKernelParams& params,
                            unsigned n_workers) {
    const Eigen::Index m = X.rows();
    if (m < 1) throw std::invalid_argument("classical_gram: empty dataset");
    validate_params(params);

    KernelMatrix K{Eigen::MatrixXd(m, m), kernel_descriptor(params)};
    parallel_for(m, n_workers, [&](Eigen::Index i) {
        for (Eigen::Index j = i; j < m; ++j) {
            const double v = classical_kernel(row_span(X, i), row_span(X, j), params);
            K.values(i, j) = v;
            K.values(j, i) = v;
        }
    });
    return K;
}

FeatureMatrix cross_gram(const FeatureMatrix& A, const FeatureMatrix& B,
                         const FeatureMapConfig& config) {
    if (A.cols() != B.cols()) throw std::invalid_argument("cross_gram: dimension mismatch");
    if (A.cols() != config.n_qubits) {
        throw std::invalid_argument("cross_gram: feature dimension != n_qubits");
    }
    std::vector<Statevector> a_states, b_states;
    a_states.reserve(A.rows());
    b_states.reserve(B.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i) a_states.push_back(encode(row_span(A, i), config));
    for (Eigen::Index j = 0; j < B.rows(); ++j) b_states.push_back(encode(row_span(B, j), config));
    FeatureMatrix K(A.rows(), B.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        for (Eigen::Index j = 0; j < B.rows(); ++j) {
            K(i, j) = fidelity(a_states[i], b_states[j]);
        }
    }
    return K;
}

FeatureMatrix cross_gram(const FeatureMatrix& A, const FeatureMatrix& B,
                         const ClassicalKernelParams& params) {
    if (A.cols() != B.cols()) throw std::invalid_argument("cross_gram: dimension mismatch");
    validate_params(params);
    FeatureMatrix K(A.rows(), B.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        for (Eigen::Index j = 0; j < B.rows(); ++j) {
            K(i, j) = classical_kernel(row_span(A, i), row_span(B, j), params);
        }
    }
    return K;
}

PsdReport psd_report(const KernelMatrix& K) {
    const Eigen::Index m = K.size();
    if (m < 1) throw std::invalid_argument("psd_report: empty matrix");
    if (K.values.cols() != m) throw std::invalid_argument("psd_report: matrix not square");
    const double asym = (K.values - K.values.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-9) {
        throw std::invalid_argument("psd_report: matrix asymmetric beyond 1e-9 (max " +
                                    std::to_string(asym) + ")");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(K.values,
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("psd_report: eigensolver failed");
    }
    PsdReport report;
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
    report.is_psd = report.min_eigenvalue >= -1e-9 * static_cast<double>(m);
    return report;
}

}  // namespace qksvm
