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

#include "qksvm/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "qksvm/gram_io.hpp"

namespace qksvm {

using njson = nlohmann::ordered_json;

namespace {

njson generator_to_json(const GeneratorSpec& g) {
    njson j;
    j["kind"] = g.kind;
    j["n_per_class"] = g.n_per_class;
    j["noise"] = g.noise;
    j["spread"] = g.spread;
    j["centers"] = g.centers;
    j["seed"] = g.seed;
    return j;
}

GeneratorSpec generator_from_json(const njson& j) {
    GeneratorSpec g;
    g.kind = j.value("kind", g.kind);
    g.n_per_class = j.value("n_per_class", g.n_per_class);
    g.noise = j.value("noise", g.noise);
    g.spread = j.value("spread", g.spread);
    if (j.contains("centers") && !j.at("centers").is_null()) {
        g.centers = j.at("centers").get<std::vector<std::vector<double>>>();
    }
    g.seed = j.value("seed", g.seed);
    return g;
}

}  // namespace

std::string config_to_json(const ExperimentConfig& config) {
    njson j;
    j["tag"] = config.tag;

    njson dataset;
    dataset["path"] = config.dataset.path;
    dataset["label_column"] = config.dataset.label_column;
    dataset["generator"] =
        config.dataset.generator ? generator_to_json(*config.dataset.generator) : njson(nullptr);
    j["dataset"] = std::move(dataset);

    njson preprocess;
    if (config.preprocess.scaler) {
        njson scaler;
        scaler["kind"] = config.preprocess.scaler->kind;
        scaler["lo"] = config.preprocess.scaler->lo;
        scaler["hi"] = config.preprocess.scaler->hi;
        preprocess["scaler"] = std::move(scaler);
    } else {
        preprocess["scaler"] = nullptr;
    }
    preprocess["pca_k"] =
        config.preprocess.pca_k ? njson(*config.preprocess.pca_k) : njson(nullptr);
    j["preprocess"] = std::move(preprocess);

    njson split;
    split["train_fraction"] = config.split.train_fraction;
    split["seed"] = config.split.seed;
    j["split"] = std::move(split);

    njson kernel;
    kernel["type"] = config.kernel.type;
    kernel["n_qubits"] =
        config.kernel.n_qubits ? njson(*config.kernel.n_qubits) : njson(nullptr);
    kernel["reps"] = config.kernel.reps;
    kernel["entanglement"] = config.kernel.entanglement;
    kernel["pair_phase"] = config.kernel.pair_phase;
    kernel["gamma"] = config.kernel.gamma ? njson(*config.kernel.gamma) : njson(nullptr);
    kernel["degree"] = config.kernel.degree;
    kernel["coef0"] = config.kernel.coef0;
    j["kernel"] = std::move(kernel);

    njson trainer;
    trainer["algorithm"] = config.trainer.algorithm;
    trainer["C"] = config.trainer.C;
    trainer["tol"] = config.trainer.tol;
    trainer["max_passes"] = config.trainer.max_passes;
    trainer["seed"] = config.trainer.seed;
    trainer["learning_rate"] = config.trainer.learning_rate;
    trainer["epochs"] = config.trainer.epochs;
    j["trainer"] = std::move(trainer);

    return j.dump(2) + "\n";
}

ExperimentConfig config_from_json(const std::string& text) {
    njson j = njson::parse(text);
    if (j.contains("config") && j.at("config").is_object()) {
        j = j.at("config");  // result files embed their config
    }
    ExperimentConfig config;
    config.tag = j.value("tag", std::string{});
    if (j.contains("dataset")) {
        const auto& d = j.at("dataset");
        config.dataset.path = d.value("path", std::string{});
        config.dataset.label_column = d.value("label_column", std::string{"label"});
        if (d.contains("generator") && !d.at("generator").is_null()) {
            config.dataset.generator = generator_from_json(d.at("generator"));
        }
    }
    if (j.contains("preprocess")) {
        const auto& p = j.at("preprocess");
        if (p.contains("scaler")) {
            if (p.at("scaler").is_null()) {
                config.preprocess.scaler.reset();
            } else {
                ScalerSpec scaler;
                scaler.kind = p.at("scaler").value("kind", scaler.kind);
                scaler.lo = p.at("scaler").value("lo", scaler.lo);
                scaler.hi = p.at("scaler").value("hi", scaler.hi);
                config.preprocess.scaler = scaler;
            }
        }
        if (p.contains("pca_k") && !p.at("pca_k").is_null()) {
            config.preprocess.pca_k = p.at("pca_k").get<int>();
        }
    }
    if (j.contains("split")) {
        config.split.train_fraction =
            j.at("split").value("train_fraction", config.split.train_fraction);
        config.split.seed = j.at("split").value("seed", config.split.seed);
    }
    if (j.contains("kernel")) {
        const auto& k = j.at("kernel");
        config.kernel.type = k.value("type", config.kernel.type);
        if (k.contains("n_qubits") && !k.at("n_qubits").is_null()) {
            config.kernel.n_qubits = k.at("n_qubits").get<int>();
        }
        config.kernel.reps = k.value("reps", config.kernel.reps);
        config.kernel.entanglement = k.value("entanglement", config.kernel.entanglement);
        config.kernel.pair_phase = k.value("pair_phase", config.kernel.pair_phase);
        if (k.contains("gamma") && !k.at("gamma").is_null()) {
            config.kernel.gamma = k.at("gamma").get<double>();
        }
        config.kernel.degree = k.value("degree", config.kernel.degree);
        config.kernel.coef0 = k.value("coef0", config.kernel.coef0);
    }
    if (j.contains("trainer")) {
        const auto& t = j.at("trainer");
        config.trainer.algorithm = t.value("algorithm", config.trainer.algorithm);
        config.trainer.C = t.value("C", config.trainer.C);
        config.trainer.tol = t.value("tol", config.trainer.tol);
        config.trainer.max_passes = t.value("max_passes", config.trainer.max_passes);
        config.trainer.seed = t.value("seed", config.trainer.seed);
        config.trainer.learning_rate = t.value("learning_rate", config.trainer.learning_rate);
        config.trainer.epochs = t.value("epochs", config.trainer.epochs);
    }
    return config;
}

Dataset dataset_from_spec(const DatasetSpec& spec) {
    if (spec.generator) {
        const GeneratorSpec& g = *spec.generator;
        if (g.kind == "blobs") {
            auto centers = g.centers;
            if (centers.empty()) centers = {{-1.0, -1.0}, {1.0, 1.0}};
            return gen_blobs(g.n_per_class, centers, g.spread, g.seed);
        }
        return gen_hard(g.n_per_class, hard_kind_from_name(g.kind), g.noise, g.seed);
    }
    if (spec.path.empty()) {
        throw std::invalid_argument("dataset spec needs a path or a generator");
    }
    return load_csv(spec.path, spec.label_column);
}

std::string dataset_to_csv(const Dataset& ds) {
    std::string out;
    for (const auto& name : ds.feature_names) {
        out += name;
        out += ',';
    }
    out += "label\n";
    for (Eigen::Index r = 0; r < ds.size(); ++r) {
        for (Eigen::Index c = 0; c < ds.dim(); ++c) {
            out += fmt_double(ds.X(r, c));
            out += ',';
        }
        out += ds.class_names[ds.y[r]];
        out += '\n';
    }
    return out;
}

std::string dataset_provenance_json(const Dataset& ds) {
    njson j;
    j["provenance"] = njson::parse(ds.provenance);
    j["rows"] = ds.size();
    j["features"] = ds.dim();
    j["classes"] = ds.class_names;
    return j.dump(2) + "\n";
}

TrainConfig to_train_config(const TrainerSpec& spec) {
    TrainConfig cfg;
    cfg.C = spec.C;
    cfg.tol = spec.tol;
    cfg.max_passes = spec.max_passes;
    cfg.seed = spec.seed;
    cfg.trainer = trainer_from_name(spec.algorithm);
    cfg.learning_rate = spec.learning_rate;
    cfg.epochs = spec.epochs;
    return cfg;
}

PreparedData prepare_data(const ExperimentConfig& config) {
    const Dataset full = dataset_from_spec(config.dataset);
    PreparedData prepared;
    prepared.split =
        stratified_split_indices(full.y, config.split.train_fraction, config.split.seed);
    Dataset train = take_rows(full, prepared.split.train);
    Dataset test = take_rows(full, prepared.split.test);

    if (config.preprocess.pca_k) {
        const PcaParams pca = fit_pca(train, *config.preprocess.pca_k);
        train.X = apply_pca(pca, train.X);
        test.X = apply_pca(pca, test.X);
        train.feature_names.clear();
        for (int c = 0; c < *config.preprocess.pca_k; ++c) {
            train.feature_names.push_back("pc" + std::to_string(c + 1));
        }
        test.feature_names = train.feature_names;
    }
    if (config.preprocess.scaler) {
        const ScalerSpec& s = *config.preprocess.scaler;
        const ScalerParams params =
            fit_scaler(train, scaler_kind_from_name(s.kind), s.lo, s.hi);
        train.X = apply_scaler(params, train.X);
        test.X = apply_scaler(params, test.X);
    }

    prepared.train_X = std::move(train.X);
    prepared.test_X = std::move(test.X);
    prepared.train_y = std::move(train.y);
    prepared.test_y = std::move(test.y);
    prepared.n_classes = full.n_classes();
    prepared.class_names = full.class_names;
    prepared.dataset_provenance = full.provenance;
    return prepared;
}

namespace {

struct ResolvedKernel {
    bool quantum = false;
    FeatureMapConfig feature_map;
    ClassicalKernelParams classical;
};

ResolvedKernel resolve_kernel(const KernelSpec& spec, Eigen::Index d) {
    ResolvedKernel rk;
    if (spec.type == "quantum") {
        rk.quantum = true;
        if (spec.n_qubits && *spec.n_qubits != d) {
            throw std::invalid_argument("configured n_qubits " +
                                        std::to_string(*spec.n_qubits) +
                                        " does not match the data dimension " +
                                        std::to_string(d));
        }
        rk.feature_map.n_qubits = static_cast<int>(d);
        rk.feature_map.reps = spec.reps;
        rk.feature_map.entanglement = entanglement_from_name(spec.entanglement);
        rk.feature_map.pair_phase = spec.pair_phase;
    } else {
        rk.classical.kind = classical_kind_from_name(spec.type);
        rk.classical.gamma = spec.gamma.value_or(default_gamma(static_cast<int>(d)));
        rk.classical.degree = spec.degree;
        rk.classical.coef0 = spec.coef0;
    }
    return rk;
}

std::vector<int> to_binary_labels(const std::vector<int>& y) {
    std::vector<int> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] == 1 ? 1 : -1;
    return out;
}

FeatureMatrix slice_gram(const KernelMatrix& K, const std::vector<Eigen::Index>& rows,
                         const std::vector<Eigen::Index>& cols) {
    FeatureMatrix block(static_cast<Eigen::Index>(rows.size()),
                        static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                K.values(rows[i], cols[j]);
        }
    }
    return block;
}

njson report_to_json(const EvalReport& report) {
    njson j;
    j["accuracy"] = report.accuracy;
    j["precision"] = report.precision;
    j["recall"] = report.recall;
    j["f1"] = report.f1;
    j["averaging"] = report.averaging;
    j["confusion"] = report.confusion;
    return j;
}

}  // namespace

KernelMatrix compute_full_gram(const ExperimentConfig& config) {
    const PreparedData prepared = prepare_data(config);
    const Eigen::Index m_train = prepared.train_X.rows();
    const Eigen::Index m_test = prepared.test_X.rows();
    const Eigen::Index m = m_train + m_test;

    // Reassemble preprocessed rows into original dataset order.
    FeatureMatrix X(m, prepared.train_X.cols());
    for (std::size_t i = 0; i < prepared.split.train.size(); ++i) {
        X.row(prepared.split.train[i]) = prepared.train_X.row(static_cast<Eigen::Index>(i));
    }
    for (std::size_t i = 0; i < prepared.split.test.size(); ++i) {
        X.row(prepared.split.test[i]) = prepared.test_X.row(static_cast<Eigen::Index>(i));
    }

    const ResolvedKernel rk = resolve_kernel(config.kernel, X.cols());
    return rk.quantum ? quantum_gram(X, rk.feature_map)
                      : classical_gram(X, rk.classical);
}

TrainEvalResult run_train_eval(const ExperimentConfig& config, const KernelMatrix* full_gram) {
    const auto t0 = std::chrono::steady_clock::now();
    const PreparedData prepared = prepare_data(config);
    const ResolvedKernel rk = resolve_kernel(config.kernel, prepared.train_X.cols());

    KernelMatrix K_train;
    FeatureMatrix K_test_rows;
    if (full_gram) {
        const auto m = static_cast<Eigen::Index>(prepared.split.train.size() +
                                                 prepared.split.test.size());
        if (full_gram->size() != m) {
            throw std::invalid_argument("precomputed gram has size " +
                                        std::to_string(full_gram->size()) + ", dataset has " +
                                        std::to_string(m) + " rows");
        }
        K_train.values = slice_gram(*full_gram, prepared.split.train, prepared.split.train);
        K_train.kind = full_gram->kind;
        K_test_rows = slice_gram(*full_gram, prepared.split.test, prepared.split.train);
    } else if (rk.quantum) {
        K_train = quantum_gram(prepared.train_X, rk.feature_map);
        K_test_rows = cross_gram(prepared.test_X, prepared.train_X, rk.feature_map);
    } else {
        K_train = classical_gram(prepared.train_X, rk.classical);
        K_test_rows = cross_gram(prepared.test_X, prepared.train_X, rk.classical);
    }

    const TrainConfig train_cfg = to_train_config(config.trainer);
    const FeatureMatrix K_train_rows = K_train.values;

    TrainEvalResult result;
    result.config = config;
    if (rk.quantum) {
        result.config.kernel.n_qubits = rk.feature_map.n_qubits;
    } else {
        result.config.kernel.gamma = rk.classical.gamma;
    }
    result.kernel_descriptor = K_train.kind;
    result.class_names = prepared.class_names;

    std::vector<int> train_pred, test_pred;
    if (prepared.n_classes == 2) {
        const std::vector<int> y_bin = to_binary_labels(prepared.train_y);
        SvmModel model = train_cfg.trainer == Trainer::Smo ? train_smo(K_train, y_bin, train_cfg)
                                                           : train_sgd(K_train, y_bin, train_cfg);
        const auto to01 = [](const std::vector<int>& labels) {
            std::vector<int> out(labels.size());
            for (std::size_t i = 0; i < labels.size(); ++i) out[i] = labels[i] == 1 ? 1 : 0;
            return out;
        };
        train_pred = to01(predict(model, K_train_rows));
        test_pred = to01(predict(model, K_test_rows));
        result.classes = {0, 1};
        result.models.push_back(std::move(model));
    } else {
        MulticlassModel model = train_multiclass(K_train, prepared.train_y, train_cfg);
        train_pred = predict_multiclass(model, K_train_rows);
        test_pred = predict_multiclass(model, K_test_rows);
        result.classes = model.classes;
        result.models = std::move(model.per_class);
    }

    result.train_report = evaluate(prepared.train_y, train_pred, prepared.n_classes);
    result.test_report = evaluate(prepared.test_y, test_pred, prepared.n_classes);
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

SweepResult run_sweep_depth(const ExperimentConfig& config, const std::vector<int>& reps_list) {
    if (reps_list.empty()) throw std::invalid_argument("sweep-depth: empty reps list");
    if (std::set<int>(reps_list.begin(), reps_list.end()).size() != reps_list.size()) {
        throw std::invalid_argument("sweep-depth: duplicate reps values");
    }
    if (config.kernel.type != "quantum") {
        throw std::invalid_argument("sweep-depth: kernel type must be quantum");
    }
    SweepResult sweep;
    sweep.config = config;
    sweep.axis = "depth";
    for (const int reps : reps_list) {
        ExperimentConfig point = config;
        point.kernel.reps = reps;
        const TrainEvalResult r = run_train_eval(point);
        SweepRow row;
        row.kernel_label = "quantum";
        row.reps = reps;
        row.train_accuracy = r.train_report.accuracy;
        row.test_accuracy = r.test_report.accuracy;
        row.train_report = r.train_report;
        row.test_report = r.test_report;
        row.wall_seconds = r.wall_seconds;
        sweep.rows.push_back(std::move(row));
    }
    return sweep;
}

SweepResult run_sweep_kernels(const ExperimentConfig& config,
                              const std::vector<std::string>& kernels,
                              const std::vector<double>& learning_rates) {
    if (kernels.empty() || learning_rates.empty()) {
        throw std::invalid_argument("sweep-kernels: empty grid");
    }
    if (config.trainer.algorithm != "sgd") {
        throw std::invalid_argument("sweep-kernels: the learning-rate axis requires the sgd trainer");
    }
    SweepResult sweep;
    sweep.config = config;
    sweep.axis = "kernels";
    for (const auto& kernel : kernels) {
        for (const double lr : learning_rates) {
            ExperimentConfig point = config;
            point.kernel.type = kernel;  // quantum settings carry over from the base config
            point.trainer.learning_rate = lr;
            const TrainEvalResult r = run_train_eval(point);
            SweepRow row;
            row.kernel_label = kernel;
            row.learning_rate = lr;
            row.reps = kernel == "quantum" ? config.kernel.reps : 0;
            row.train_accuracy = r.train_report.accuracy;
            row.test_accuracy = r.test_report.accuracy;
            row.train_report = r.train_report;
            row.test_report = r.test_report;
            row.wall_seconds = r.wall_seconds;
            sweep.rows.push_back(std::move(row));
        }
    }
    return sweep;
}

std::string train_eval_report_json(const TrainEvalResult& result) {
    njson j;
    j["config"] = njson::parse(config_to_json(result.config));
    j["kernel"] = result.kernel_descriptor;
    j["class_names"] = result.class_names;
    j["train"] = report_to_json(result.train_report);
    j["test"] = report_to_json(result.test_report);
    return j.dump(2) + "\n";
}

std::string model_to_json(const TrainEvalResult& result) {
    njson j;
    j["config"] = njson::parse(config_to_json(result.config));
    j["kernel"] = result.kernel_descriptor;
    j["classes"] = result.classes;
    auto models = njson::array();
    for (const auto& m : result.models) {
        njson jm;
        jm["alphas"] = m.alphas;
        jm["labels"] = m.labels;
        jm["bias"] = m.bias;
        jm["support_indices"] = m.support_indices;
        jm["C"] = m.C;
        jm["kernel"] = m.kernel_descriptor;
        jm["trainer"] = m.trainer;
        jm["seed"] = m.seed;
        jm["passes_or_epochs"] = m.passes_or_epochs;
        if (!m.dual_objective_trace.empty()) {
            jm["dual_objective"] = m.dual_objective_trace.back();
            jm["dual_updates"] = m.dual_objective_trace.size();
        }
        models.push_back(std::move(jm));
    }
    j["models"] = std::move(models);
    return j.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepResult& result) {
    std::string out;
    if (result.axis == "depth") {
        out = "reps,train_acc,test_acc\n";
        for (const auto& row : result.rows) {
            out += std::to_string(row.reps) + "," + fmt_double(row.train_accuracy) + "," +
                   fmt_double(row.test_accuracy) + "\n";
        }
    } else {
        out = "kernel,learning_rate,train_acc,test_acc\n";
        for (const auto& row : result.rows) {
            out += row.kernel_label + "," + fmt_double(row.learning_rate) + "," +
                   fmt_double(row.train_accuracy) + "," + fmt_double(row.test_accuracy) + "\n";
        }
    }
    return out;
}

std::string sweep_to_json(const SweepResult& result) {
    njson j;
    j["config"] = njson::parse(config_to_json(result.config));
    j["axis"] = result.axis;
    auto rows = njson::array();
    for (const auto& row : result.rows) {
        njson jr;
        jr["kernel"] = row.kernel_label;
        if (result.axis == "depth") {
            jr["reps"] = row.reps;
        } else {
            jr["learning_rate"] = row.learning_rate;
        }
        jr["train_acc"] = row.train_accuracy;
        jr["test_acc"] = row.test_accuracy;
        jr["train_report"] = report_to_json(row.train_report);
        jr["test_report"] = report_to_json(row.test_report);
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string sweep_summary_csv(const SweepResult& result) {
    std::string out = "tag,kernel,learning_rate,accuracy,precision,recall,f1\n";
    const std::string tag = result.config.tag.empty() ? "-" : result.config.tag;
    for (const auto& row : result.rows) {
        out += tag + "," + row.kernel_label + "," + fmt_double(row.learning_rate) + "," +
               fmt_double(row.test_report.accuracy) + "," +
               fmt_double(row.test_report.precision) + "," +
               fmt_double(row.test_report.recall) + "," + fmt_double(row.test_report.f1) + "\n";
    }
    return out;
}

std::string sweep_timing_json(const SweepResult& result) {
    njson j;
    auto walls = njson::array();
    double total = 0.0;
    for (const auto& row : result.rows) {
        walls.push_back(row.wall_seconds);
        total += row.wall_seconds;
    }
    j["rows_wall_seconds"] = std::move(walls);
    j["total_wall_seconds"] = total;
    return j.dump(2) + "\n";
}

}  // namespace qksvm
