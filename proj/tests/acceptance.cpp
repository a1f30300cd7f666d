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
//
// Acceptance suite: runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qksvm/experiment.hpp"
#include "qksvm/gram_io.hpp"
#include "qksvm/rng.hpp"

using namespace qksvm;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Gate random_gate(Rng& rng, int n_qubits) {
    constexpr GateKind kinds[] = {GateKind::H,  GateKind::RX,   GateKind::RY,
                                  GateKind::RZ, GateKind::P,    GateKind::CNOT,
                                  GateKind::CZ};
    while (true) {
        const GateKind kind = kinds[rng.uniform_index(7)];
        if (gate_is_two_qubit(kind) && n_qubits < 2) continue;
        const double angle = rng.uniform(-6.5, 6.5);
        if (!gate_is_two_qubit(kind)) {
            return Gate{kind, angle, static_cast<int>(rng.uniform_index(n_qubits)), -1};
        }
        const int control = static_cast<int>(rng.uniform_index(n_qubits));
        int target = static_cast<int>(rng.uniform_index(n_qubits - 1));
        if (target >= control) ++target;
        return Gate{kind, 0.0, control, target};
    }
}

std::filesystem::path source_path(const std::string& relative) {
    return std::filesystem::path(QKSVM_SOURCE_DIR) / relative;
}

ExperimentConfig load_suite(const std::string& name) {
    ExperimentConfig config = config_from_json(read_text_file(source_path("experiments/" + name)));
    if (!config.dataset.path.empty() &&
        std::filesystem::path(config.dataset.path).is_relative()) {
        config.dataset.path = source_path(config.dataset.path).string();
    }
    return config;
}

// --- criteria ---------------------------------------------------------

void criterion_1_simulator_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(1001);
    double max_err = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform_index(3));
        Circuit c(n);
        const int n_gates = 1 + static_cast<int>(rng.uniform_index(20));
        for (int g = 0; g < n_gates; ++g) c.append(random_gate(rng, n));
        const Statevector s = apply_circuit(new_zero_state(n), c);
        const oracle::Vec expected = oracle::apply_circuit(c, oracle::zero_state(n));
        max_err = std::max(max_err, oracle::max_abs_diff(oracle::to_vec(s), expected));
    }
    const double elapsed = seconds_since(t0);
    report(1, "simulator matches the dense Kronecker oracle",
           max_err <= 1e-12 && elapsed < 10.0,
           "500 circuits, max_err=" + fmt_double(max_err) + ", " + fmt_double(elapsed) + "s");
}

void criterion_2_bell_fixture() {
    const Statevector bell = apply_circuit(new_zero_state(2), bell_circuit());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double err = std::max(
        std::max(std::abs(bell.amplitude(0) - cdouble(inv_sqrt2)), std::abs(bell.amplitude(1))),
        std::max(std::abs(bell.amplitude(2)), std::abs(bell.amplitude(3) - cdouble(inv_sqrt2))));
    report(2, "bell circuit yields (1,0,0,1)/sqrt(2)", err <= 1e-12,
           "max_err=" + fmt_double(err));
}

void criterion_3_kernel_axioms() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(3003);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 50 && ok; ++trial) {
        const int d = 2 + static_cast<int>(rng.uniform_index(3));
        const int m = 1 + static_cast<int>(rng.uniform_index(20));
        FeatureMapConfig fm;
        fm.n_qubits = d;
        fm.reps = 1 + static_cast<int>(rng.uniform_index(3));
        fm.entanglement = trial % 2 ? Entanglement::Linear : Entanglement::Full;
        FeatureMatrix X(m, d);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < d; ++j) X(i, j) = rng.uniform(0.0, 3.14159265);

        const KernelMatrix K = quantum_gram(X, fm);
        const double asym = (K.values - K.values.transpose()).cwiseAbs().maxCoeff();
        double diag_err = 0.0;
        for (Eigen::Index i = 0; i < m; ++i) diag_err = std::max(diag_err, std::abs(K(i, i) - 1.0));
        const double lo = K.values.minCoeff();
        const double hi = K.values.maxCoeff();
        const double min_eig = psd_report(K).min_eigenvalue;
        if (asym > 1e-12 || diag_err > 1e-10 || lo < 0.0 || hi > 1.0 + 1e-10 ||
            min_eig < -1e-9 * m) {
            ok = false;
            detail = "trial " + std::to_string(trial) + ": asym=" + fmt_double(asym) +
                     " diag_err=" + fmt_double(diag_err) + " range=[" + fmt_double(lo) + "," +
                     fmt_double(hi) + "] min_eig=" + fmt_double(min_eig);
        }
    }
    const double elapsed = seconds_since(t0);
    if (ok && elapsed >= 30.0) {
        ok = false;
        detail = "too slow";
    }
    if (ok) detail = "50 grams, " + fmt_double(elapsed) + "s";
    report(3, "quantum gram axioms (symmetry, diagonal, range, PSD)", ok, detail);
}

void criterion_4_entanglement_nontrivial() {
    Rng rng(4004);
    FeatureMatrix X(10, 2);
    for (Eigen::Index i = 0; i < 10; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) X(i, j) = rng.uniform(0.0, 3.14159265);
    FeatureMapConfig with;
    with.n_qubits = 2;
    with.reps = 2;
    with.entanglement = Entanglement::Linear;
    FeatureMapConfig without = with;
    without.entanglement = Entanglement::None;
    const double diff = (quantum_gram(X, with).values - quantum_gram(X, without).values)
                            .cwiseAbs()
                            .maxCoeff();
    report(4, "entangling layer changes the kernel", diff > 1e-3,
           "max_entry_diff=" + fmt_double(diff));
}

void criterion_5_smo_optimality() {
    bool ok = true;
    std::string detail;

    // analytic 2-point problem
    KernelMatrix K2;
    K2.values.resize(2, 2);
    K2.values << 1, -1, -1, 1;
    K2.kind = "analytic";
    TrainConfig cfg2;
    cfg2.C = 10.0;
    cfg2.seed = 1;
    const SvmModel m2 = train_smo(K2, {-1, 1}, cfg2);
    if (std::abs(m2.alphas[0] - 0.5) > 1e-6 || std::abs(m2.alphas[1] - 0.5) > 1e-6 ||
        std::abs(m2.bias) > 1e-6) {
        ok = false;
        detail = "analytic problem: alpha=(" + fmt_double(m2.alphas[0]) + "," +
                 fmt_double(m2.alphas[1]) + "), b=" + fmt_double(m2.bias);
    }

    int total_violations = 0;
    for (int problem = 0; problem < 20 && ok; ++problem) {
        const std::uint64_t seed = 100 + problem;
        const Dataset ds = problem % 2 == 0
                               ? gen_blobs(25, {{-2.0, -1.0}, {2.0, 1.0}}, 1.0, seed)
                               : gen_hard(30, HardKind::Xor, 0.0, seed);
        ClassicalKernelParams params;
        params.kind = problem % 2 == 0 ? ClassicalKind::Linear : ClassicalKind::Rbf;
        params.gamma = default_gamma(2);
        const KernelMatrix K = classical_gram(ds.X, params);
        std::vector<int> y(ds.y.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = ds.y[i] == 1 ? 1 : -1;

        TrainConfig cfg;
        cfg.C = 1.0;
        cfg.tol = 1e-3;
        cfg.seed = seed;
        const SvmModel model = train_smo(K, y, cfg);

        double alpha_dot_y = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (model.alphas[i] < 0.0 || model.alphas[i] > cfg.C) {
                ok = false;
                detail = "box constraint broken on problem " + std::to_string(problem);
            }
            alpha_dot_y += model.alphas[i] * y[i];
        }
        if (std::abs(alpha_dot_y) > 1e-6) {
            ok = false;
            detail = "equality constraint |sum a_i y_i|=" + fmt_double(std::abs(alpha_dot_y));
        }
        for (std::size_t t = 1; t < model.dual_objective_trace.size() && ok; ++t) {
            // 1e-9 slack absorbs floating-point roundoff in the objective sum
            if (model.dual_objective_trace[t] < model.dual_objective_trace[t - 1] - 1e-9) {
                ok = false;
                detail = "dual objective decreased at update " + std::to_string(t);
            }
        }
        const KktReport kkt = kkt_report(model, K, y, cfg);
        total_violations += kkt.violations;
        if (kkt.violations != 0) {
            ok = false;
            detail = "problem " + std::to_string(problem) + " (m=" +
                     std::to_string(y.size()) + "): " + std::to_string(kkt.violations) +
                     " KKT violations, max=" + fmt_double(kkt.max_violation);
        }
    }
    if (ok) {
        detail = "20 problems, 0 KKT violations at tol 1e-3; analytic alpha=(0.5,0.5), b=0";
    }
    report(5, "SMO optimality, constraints, monotone dual ascent", ok, detail);
}

void criterion_6_linear_data_parity() {
    ExperimentConfig config;
    GeneratorSpec gen;
    gen.kind = "blobs";
    gen.n_per_class = 100;
    gen.spread = 0.8;
    gen.centers = {{-5.0, -5.0}, {5.0, 5.0}};
    gen.seed = 42;
    config.dataset.generator = gen;
    config.split = {0.8, 42};
    config.kernel.type = "quantum";
    config.kernel.reps = 2;
    config.trainer.algorithm = "smo";

    const double q = run_train_eval(config).test_report.accuracy;
    config.kernel.type = "linear";
    const double l = run_train_eval(config).test_report.accuracy;
    const bool pass = q >= 0.95 && l >= 0.95 && std::abs(q - l) <= 0.05;
    report(6, "separable data: quantum and linear SVM agree",
           pass, "quantum=" + fmt_double(q) + " linear=" + fmt_double(l));
}

void criterion_7_hard_data_advantage() {
    ExperimentConfig config;
    GeneratorSpec gen;
    gen.kind = "xor";
    gen.n_per_class = 100;
    gen.noise = 0.0;
    gen.seed = 42;
    config.dataset.generator = gen;
    config.split = {0.8, 42};
    config.kernel.type = "quantum";
    config.kernel.reps = 2;
    config.kernel.entanglement = "linear";
    config.trainer.algorithm = "smo";

    const double q = run_train_eval(config).test_report.accuracy;
    config.kernel.type = "linear";
    const double l = run_train_eval(config).test_report.accuracy;

    // Golden number pinned from this implementation's first verified run
    // (criteria 1-5 green): quantum test accuracy 0.825 on this seed.
    const double golden = 0.825;
    const bool pass = (q - l >= 0.15) && std::abs(q - golden) <= 1e-12;
    report(7, "hard data: entangled quantum kernel beats linear by >= 0.15", pass,
           "quantum=" + fmt_double(q) + " linear=" + fmt_double(l) +
               " margin=" + fmt_double(q - l) + " golden=" + fmt_double(golden));
}

void criterion_8_depth_sweep_shape() {
    ExperimentConfig config = load_suite("suite_i.json");
    const std::vector<int> reps{1, 2, 3, 4, 5};
    const SweepResult a = run_sweep_depth(config, reps);
    const SweepResult b = run_sweep_depth(config, reps);
    const std::string csv_a = sweep_to_csv(a);
    const std::string csv_b = sweep_to_csv(b);

    bool ok = a.rows.size() == 5 && csv_a == csv_b;
    std::string accs;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].reps != static_cast<int>(i + 1)) ok = false;
        if (!(a.rows[i].train_accuracy >= 0.0 && a.rows[i].train_accuracy <= 1.0)) ok = false;
        if (!(a.rows[i].wall_seconds > 0.0)) ok = false;
        accs += (i ? " " : "") + fmt_double(a.rows[i].train_accuracy);
    }
    report(8, "iris depth sweep: 5 deterministic rows", ok, "train_acc per reps: " + accs);
}

void criterion_9_performance_envelope() {
    // quantum gram, m=100, 4 qubits, reps 2
    Rng rng(9009);
    FeatureMatrix X(100, 4);
    for (Eigen::Index i = 0; i < 100; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) X(i, j) = rng.uniform(0.0, 3.14159265);
    FeatureMapConfig fm;
    fm.n_qubits = 4;
    fm.reps = 2;
    fm.entanglement = Entanglement::Linear;
    const auto t0 = std::chrono::steady_clock::now();
    const KernelMatrix K = quantum_gram(X, fm);
    const double gram_seconds = seconds_since(t0);

    // full default suite: b (train-eval), i (depth sweep), r (kernel sweep)
    const auto t1 = std::chrono::steady_clock::now();
    const TrainEvalResult rb = run_train_eval(load_suite("suite_b.json"));
    const SweepResult ri = run_sweep_depth(load_suite("suite_i.json"), {1, 2, 3, 4, 5});
    const SweepResult rr = run_sweep_kernels(load_suite("suite_r.json"),
                                             {"quantum", "linear", "poly", "rbf", "sigmoid"},
                                             {0.01, 0.1, 0.5});
    const double suite_seconds = seconds_since(t1);

    const bool pass = K.size() == 100 && gram_seconds < 1.0 && suite_seconds < 60.0 &&
                      rb.test_report.accuracy > 0.5 && ri.rows.size() == 5 &&
                      rr.rows.size() == 15;
    report(9, "performance envelope (gram < 1s, default suite < 60s)", pass,
           "gram=" + fmt_double(gram_seconds) + "s suite=" + fmt_double(suite_seconds) +
               "s b_test_acc=" + fmt_double(rb.test_report.accuracy));
}

void criterion_10_metrics_oracle() {
    Rng rng(1010);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 20 && ok; ++trial) {
        const int n_classes = 2 + static_cast<int>(rng.uniform_index(3));
        const int n = 4 + static_cast<int>(rng.uniform_index(30));
        std::vector<int> yt, yp;
        for (int i = 0; i < n; ++i) {
            yt.push_back(static_cast<int>(rng.uniform_index(n_classes)));
            yp.push_back(static_cast<int>(rng.uniform_index(n_classes)));
        }
        const EvalReport r = evaluate(yt, yp, n_classes);

        // independent brute-force counting
        long correct = 0;
        std::vector<std::vector<long>> confusion(n_classes, std::vector<long>(n_classes, 0));
        for (int i = 0; i < n; ++i) {
            correct += yt[i] == yp[i];
            ++confusion[yt[i]][yp[i]];
        }
        if (confusion != r.confusion ||
            std::abs(r.accuracy - static_cast<double>(correct) / n) > 1e-14) {
            ok = false;
            detail = "trial " + std::to_string(trial) + " diverged";
            break;
        }
        const auto prf = [&](int cls) {
            long tp = 0, fp = 0, fn = 0;
            for (int i = 0; i < n; ++i) {
                tp += yt[i] == cls && yp[i] == cls;
                fp += yt[i] != cls && yp[i] == cls;
                fn += yt[i] == cls && yp[i] != cls;
            }
            const double p = tp + fp ? static_cast<double>(tp) / (tp + fp) : 0.0;
            const double rr = tp + fn ? static_cast<double>(tp) / (tp + fn) : 0.0;
            const double f = p + rr > 0 ? 2 * p * rr / (p + rr) : 0.0;
            return std::array<double, 3>{p, rr, f};
        };
        double sp = 0, sr = 0, sf = 0;
        if (n_classes == 2) {
            const auto s = prf(1);
            sp = s[0];
            sr = s[1];
            sf = s[2];
        } else {
            for (int c = 0; c < n_classes; ++c) {
                const auto s = prf(c);
                sp += s[0] / n_classes;
                sr += s[1] / n_classes;
                sf += s[2] / n_classes;
            }
        }
        if (std::abs(r.precision - sp) > 1e-12 || std::abs(r.recall - sr) > 1e-12 ||
            std::abs(r.f1 - sf) > 1e-12) {
            ok = false;
            detail = "trial " + std::to_string(trial) + " precision/recall/f1 diverged";
        }
    }
    if (ok) detail = "20 fixtures match the independent counter";
    report(10, "metrics match hand-counted confusion matrices", ok, detail);
}

}  // namespace

int main() {
    criterion_1_simulator_oracle();
    criterion_2_bell_fixture();
    criterion_3_kernel_axioms();
    criterion_4_entanglement_nontrivial();
    criterion_5_smo_optimality();
    criterion_6_linear_data_parity();
    criterion_7_hard_data_advantage();
    criterion_8_depth_sweep_shape();
    criterion_9_performance_envelope();
    criterion_10_metrics_oracle();

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
