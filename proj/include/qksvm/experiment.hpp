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
 * Replayable experiment harness behind the CLI. A JSON-serializable
 * ExperimentConfig drives every run; identical configs reproduce identical
 * result files byte for byte (wall-clock timing is reported separately).
 *
 * Preprocessing order: stratified split, then PCA (fitted on the training
 * split), then the scaler (fitted on the projected training split) so the
 * encoder sees features in its target range.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qksvm/data.hpp"
#include "qksvm/metrics.hpp"
#include "qksvm/svm.hpp"

namespace qksvm {

struct GeneratorSpec {
    std::string kind = "blobs";  // blobs | xor | rings | noisy_labels
    int n_per_class = 50;
    double noise = 0.0;                        // hard kinds: fraction of labels flipped
    double spread = 0.5;                       // blobs
    std::vector<std::vector<double>> centers;  // blobs; default two 2-D centers
    std::uint64_t seed = 0;
};

struct DatasetSpec {
    std::string path;  // CSV path; ignored when a generator is given
    std::string label_column = "label";
    std::optional<GeneratorSpec> generator;
};

struct ScalerSpec {
    std::string kind = "minmax";
    double lo = 0.0;
    double hi = 3.141592653589793;
};

struct PreprocessSpec {
    std::optional<ScalerSpec> scaler = ScalerSpec{};  // minmax to [0, pi] unless disabled
    std::optional<int> pca_k;
};

struct SplitSpec {
    double train_fraction = 0.8;
    std::uint64_t seed = 42;
};

struct KernelSpec {
    std::string type = "quantum";  // quantum | linear | poly | rbf | sigmoid
    // quantum settings; n_qubits tracks the data dimension, and a value set
    // here is validated against it
    std::optional<int> n_qubits;
    int reps = 2;
    std::string entanglement = "linear";
    std::string pair_phase = "zz_standard";
    // classical settings
    std::optional<double> gamma;  // unset -> 1/d
    int degree = 3;
    double coef0 = 0.0;
};

struct TrainerSpec {
    std::string algorithm = "smo";  // smo | sgd
    double C = 1.0;
    double tol = 1e-3;
    int max_passes = 50;
    std::uint64_t seed = 0;
    double learning_rate = 0.1;  // sgd
    int epochs = 100;            // sgd
};

struct ExperimentConfig {
    std::string tag;  // dataset label for summary tables (e.g. i, r, b)
    DatasetSpec dataset;
    PreprocessSpec preprocess;
    SplitSpec split;
    KernelSpec kernel;
    TrainerSpec trainer;
};

/// Accepts either a bare config object or any result file embedding one
/// under a top-level "config" key.
ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& config);

Dataset dataset_from_spec(const DatasetSpec& spec);
std::string dataset_to_csv(const Dataset& ds);
std::string dataset_provenance_json(const Dataset& ds);

TrainConfig to_train_config(const TrainerSpec& spec);

struct PreparedData {
    SplitIndices split;
    FeatureMatrix train_X, test_X;  // preprocessed
    std::vector<int> train_y, test_y;
    int n_classes = 0;
    std::vector<std::string> class_names;
    std::string dataset_provenance;
};

PreparedData prepare_data(const ExperimentConfig& config);

struct TrainEvalResult {
    ExperimentConfig config;
    std::string kernel_descriptor;
    EvalReport train_report, test_report;
    std::vector<int> classes;
    std::vector<std::string> class_names;
    std::vector<SvmModel> models;  // one for binary, one per class otherwise
    double wall_seconds = 0.0;
};

/// Full pipeline: data, split, preprocessing, Gram, training, evaluation.
/// When `full_gram` is given it must cover the whole dataset in row order;
/// the train/test blocks are sliced out instead of being recomputed.
TrainEvalResult run_train_eval(const ExperimentConfig& config,
                               const KernelMatrix* full_gram = nullptr);

/// Gram over the whole dataset with preprocessing fitted on the training
/// split of config.split, making `kernel` + `train-eval --gram` match the
/// integrated path exactly.
KernelMatrix compute_full_gram(const ExperimentConfig& config);

struct SweepRow {
    std::string kernel_label;
    double learning_rate = 0.0;
    int reps = 0;
    double train_accuracy = 0.0;
    double test_accuracy = 0.0;
    EvalReport train_report, test_report;
    double wall_seconds = 0.0;
};

struct SweepResult {
    ExperimentConfig config;
    std::string axis;  // "depth" | "kernels"
    std::vector<SweepRow> rows;
};

/// One train/eval per reps value on a fixed split. Rejects duplicates.
SweepResult run_sweep_depth(const ExperimentConfig& config, const std::vector<int>& reps_list);

/// Row per (kernel, learning_rate); requires the sgd trainer.
SweepResult run_sweep_kernels(const ExperimentConfig& config,
                              const std::vector<std::string>& kernels,
                              const std::vector<double>& learning_rates);

// Result serialization. Everything here is byte-deterministic for a fixed
// config; wall-clock numbers live only in the timing sidecar.
std::string train_eval_report_json(const TrainEvalResult& result);
std::string model_to_json(const TrainEvalResult& result);
std::string sweep_to_csv(const SweepResult& result);
std::string sweep_to_json(const SweepResult& result);
std::string sweep_summary_csv(const SweepResult& result);
std::string sweep_timing_json(const SweepResult& result);

}  // namespace qksvm
