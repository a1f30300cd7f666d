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
// Experiment harness CLI. Subcommands: gen-data, kernel, train-eval,
// sweep-depth, sweep-kernels, plot. Exit codes: 0 success, 2 usage error,
// 1 runtime error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qksvm/experiment.hpp"
#include "qksvm/gram_io.hpp"
#include "qksvm/svg.hpp"

namespace {

using namespace qksvm;

struct ConfigFlags {
    std::optional<std::string> config_path;
    std::optional<std::string> tag;
    // dataset
    std::optional<std::string> data_path;
    std::optional<std::string> label_column;
    std::optional<std::string> gen_kind;
    std::optional<int> gen_n;
    std::optional<double> gen_noise;
    std::optional<double> gen_spread;
    std::optional<std::uint64_t> gen_seed;
    // preprocess
    std::optional<std::string> scaler;
    std::optional<double> scale_lo;
    std::optional<double> scale_hi;
    std::optional<int> pca_k;
    // split
    std::optional<double> train_fraction;
    std::optional<std::uint64_t> split_seed;
    // kernel
    std::optional<std::string> kernel;
    std::optional<int> reps;
    std::optional<std::string> entanglement;
    std::optional<double> gamma;
    std::optional<int> degree;
    std::optional<double> coef0;
    // trainer
    std::optional<std::string> trainer;
    std::optional<double> C;
    std::optional<double> tol;
    std::optional<int> max_passes;
    std::optional<std::uint64_t> train_seed;
    std::optional<double> learning_rate;
    std::optional<int> epochs;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f) {
    cmd->add_option("--config", f.config_path, "experiment config JSON (flags override it)");
    cmd->add_option("--tag", f.tag, "dataset tag for summary tables (e.g. i, r, b)");
    cmd->add_option("--data", f.data_path, "dataset CSV path");
    cmd->add_option("--label-column", f.label_column, "label column name (default: label)");
    cmd->add_option("--gen-kind", f.gen_kind, "generator: blobs|xor|rings|noisy_labels")
        ->check(CLI::IsMember({"blobs", "xor", "rings", "noisy_labels"}));
    cmd->add_option("--gen-n", f.gen_n, "generator samples per class");
    cmd->add_option("--gen-noise", f.gen_noise, "generator label-flip fraction");
    cmd->add_option("--gen-spread", f.gen_spread, "blobs spread");
    cmd->add_option("--gen-seed", f.gen_seed, "generator seed");
    cmd->add_option("--scaler", f.scaler, "feature scaler: minmax|standard|none");
    cmd->add_option("--scale-lo", f.scale_lo, "minmax target lower bound");
    cmd->add_option("--scale-hi", f.scale_hi, "minmax target upper bound");
    cmd->add_option("--pca", f.pca_k, "PCA dimensions (fitted on the training split)");
    cmd->add_option("--train-fraction", f.train_fraction, "train split fraction (default 0.8)");
    cmd->add_option("--split-seed", f.split_seed, "split seed");
    cmd->add_option("--kernel", f.kernel, "kernel: quantum|linear|poly|rbf|sigmoid")
        ->check(CLI::IsMember({"quantum", "linear", "poly", "rbf", "sigmoid"}));
    cmd->add_option("--reps", f.reps, "feature-map repetitions (depth)");
    cmd->add_option("--entanglement", f.entanglement, "entanglement: none|linear|full")
        ->check(CLI::IsMember({"none", "linear", "full"}));
    cmd->add_option("--gamma", f.gamma, "classical kernel gamma (default 1/d)");
    cmd->add_option("--degree", f.degree, "poly kernel degree");
    cmd->add_option("--coef0", f.coef0, "poly/sigmoid coef0");
    cmd->add_option("--trainer", f.trainer, "trainer: smo|sgd")
        ->check(CLI::IsMember({"smo", "sgd"}));
    cmd->add_option("-C,--C", f.C, "regularization constant");
    cmd->add_option("--tol", f.tol, "SMO KKT tolerance");
    cmd->add_option("--max-passes", f.max_passes, "SMO clean sweeps before stopping");
    cmd->add_option("--train-seed", f.train_seed, "trainer seed");
    cmd->add_option("--lr,--learning-rate", f.learning_rate, "SGD learning rate");
    cmd->add_option("--epochs", f.epochs, "SGD epochs");
}

ExperimentConfig build_config(const ConfigFlags& f) {
    ExperimentConfig config;
    if (f.config_path) config = config_from_json(read_text_file(*f.config_path));
    if (f.tag) config.tag = *f.tag;
    if (f.data_path) {
        config.dataset.path = *f.data_path;
        config.dataset.generator.reset();
    }
    if (f.label_column) config.dataset.label_column = *f.label_column;
    if (f.gen_kind) {
        GeneratorSpec g = config.dataset.generator.value_or(GeneratorSpec{});
        g.kind = *f.gen_kind;
        config.dataset.generator = g;
    }
    if (config.dataset.generator) {
        GeneratorSpec& g = *config.dataset.generator;
        if (f.gen_n) g.n_per_class = *f.gen_n;
        if (f.gen_noise) g.noise = *f.gen_noise;
        if (f.gen_spread) g.spread = *f.gen_spread;
        if (f.gen_seed) g.seed = *f.gen_seed;
    }
    if (f.scaler) {
        if (*f.scaler == "none") {
            config.preprocess.scaler.reset();
        } else {
            ScalerSpec s = config.preprocess.scaler.value_or(ScalerSpec{});
            s.kind = *f.scaler;
            config.preprocess.scaler = s;
        }
    }
    if (config.preprocess.scaler) {
        if (f.scale_lo) config.preprocess.scaler->lo = *f.scale_lo;
        if (f.scale_hi) config.preprocess.scaler->hi = *f.scale_hi;
    }
    if (f.pca_k) config.preprocess.pca_k = *f.pca_k;
    if (f.train_fraction) config.split.train_fraction = *f.train_fraction;
    if (f.split_seed) config.split.seed = *f.split_seed;
    if (f.kernel) config.kernel.type = *f.kernel;
    if (f.reps) config.kernel.reps = *f.reps;
    if (f.entanglement) config.kernel.entanglement = *f.entanglement;
    if (f.gamma) config.kernel.gamma = *f.gamma;
    if (f.degree) config.kernel.degree = *f.degree;
    if (f.coef0) config.kernel.coef0 = *f.coef0;
    if (f.trainer) config.trainer.algorithm = *f.trainer;
    if (f.C) config.trainer.C = *f.C;
    if (f.tol) config.trainer.tol = *f.tol;
    if (f.max_passes) config.trainer.max_passes = *f.max_passes;
    if (f.train_seed) config.trainer.seed = *f.train_seed;
    if (f.learning_rate) config.trainer.learning_rate = *f.learning_rate;
    if (f.epochs) config.trainer.epochs = *f.epochs;
    return config;
}

std::vector<std::vector<double>> parse_centers(const std::string& text) {
    // "x:y;x:y" -> [[x,y],[x,y]]
    std::vector<std::vector<double>> centers;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto semi = text.find(';', pos);
        const std::string chunk =
            text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        std::vector<double> point;
        std::size_t cpos = 0;
        while (cpos <= chunk.size()) {
            const auto colon = chunk.find(':', cpos);
            const std::string cell = chunk.substr(
                cpos, colon == std::string::npos ? std::string::npos : colon - cpos);
            point.push_back(std::stod(cell));
            if (colon == std::string::npos) break;
            cpos = colon + 1;
        }
        centers.push_back(std::move(point));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return centers;
}

std::filesystem::path with_suffix(const std::filesystem::path& path, const std::string& suffix) {
    std::filesystem::path out = path;
    out.replace_extension();
    return out.concat(suffix);
}

int cmd_gen_data(const std::string& kind, int n_per_class, double noise, double spread,
                 const std::string& centers, std::uint64_t seed, const std::string& out) {
    GeneratorSpec g;
    g.kind = kind;
    g.n_per_class = n_per_class;
    g.noise = noise;
    g.spread = spread;
    if (!centers.empty()) g.centers = parse_centers(centers);
    g.seed = seed;
    DatasetSpec spec;
    spec.generator = g;
    const Dataset ds = dataset_from_spec(spec);
    write_text_file(out, dataset_to_csv(ds));
    write_text_file(with_suffix(out, ".provenance.json"), dataset_provenance_json(ds));
    std::printf("wrote %ld rows (%ld features + label) to %s\n", static_cast<long>(ds.size()),
                static_cast<long>(ds.dim()), out.c_str());
    return 0;
}

int cmd_kernel(const ConfigFlags& flags, const std::string& out, std::string format) {
    const ExperimentConfig config = build_config(flags);
    const KernelMatrix K = compute_full_gram(config);
    if (format.empty()) {
        format = std::filesystem::path(out).extension() == ".json" ? "json" : "csv";
    }
    write_text_file(out, format == "json" ? gram_to_json(K) : gram_to_csv(K));
    write_text_file(with_suffix(out, ".provenance.json"), config_to_json(config));
    const PsdReport psd = psd_report(K);
    std::printf("gram %ldx%ld kind=%s\n", static_cast<long>(K.size()),
                static_cast<long>(K.size()), K.kind.c_str());
    std::printf("min_eigenvalue=%s is_psd=%s\n", fmt_double(psd.min_eigenvalue).c_str(),
                psd.is_psd ? "true" : "false");
    return 0;
}

int cmd_train_eval(const ConfigFlags& flags, const std::string& gram_path,
                   const std::string& out_prefix) {
    const ExperimentConfig config = build_config(flags);
    std::optional<KernelMatrix> gram;
    if (!gram_path.empty()) {
        const std::string text = read_text_file(gram_path);
        gram = std::filesystem::path(gram_path).extension() == ".json" ? gram_from_json(text)
                                                                       : gram_from_csv(text);
    }
    const TrainEvalResult result = run_train_eval(config, gram ? &*gram : nullptr);
    write_text_file(out_prefix + "_report.json", train_eval_report_json(result));
    write_text_file(out_prefix + "_model.json", model_to_json(result));
    std::printf("kernel=%s\n", result.kernel_descriptor.c_str());
    std::printf("train_acc=%s test_acc=%s\n", fmt_double(result.train_report.accuracy).c_str(),
                fmt_double(result.test_report.accuracy).c_str());
    std::printf("wall_seconds=%.3f\n", result.wall_seconds);
    return 0;
}

void write_sweep_outputs(const SweepResult& sweep, const std::string& out) {
    write_text_file(out, sweep_to_csv(sweep));
    write_text_file(with_suffix(out, ".json"), sweep_to_json(sweep));
    write_text_file(with_suffix(out, ".timing.json"), sweep_timing_json(sweep));
    double total = 0.0;
    for (const auto& row : sweep.rows) {
        const std::string reps_note =
            row.reps ? " reps=" + std::to_string(row.reps) : std::string{};
        std::printf("%s%s lr=%s train_acc=%s test_acc=%s wall=%.3fs\n",
                    row.kernel_label.c_str(), reps_note.c_str(),
                    fmt_double(row.learning_rate).c_str(),
                    fmt_double(row.train_accuracy).c_str(),
                    fmt_double(row.test_accuracy).c_str(), row.wall_seconds);
        total += row.wall_seconds;
    }
    std::printf("wrote %zu rows to %s (total %.3fs)\n", sweep.rows.size(), out.c_str(), total);
}

int cmd_sweep_depth(const ConfigFlags& flags, const std::vector<int>& reps_list,
                    const std::string& out) {
    const SweepResult sweep = run_sweep_depth(build_config(flags), reps_list);
    write_sweep_outputs(sweep, out);
    return 0;
}

int cmd_sweep_kernels(const ConfigFlags& flags, const std::vector<std::string>& kernels,
                      const std::vector<double>& learning_rates, const std::string& out,
                      std::string summary) {
    const SweepResult sweep = run_sweep_kernels(build_config(flags), kernels, learning_rates);
    write_sweep_outputs(sweep, out);
    if (summary.empty()) summary = with_suffix(out, "_summary.csv").string();
    write_text_file(summary, sweep_summary_csv(sweep));
    std::printf("wrote summary to %s\n", summary.c_str());
    return 0;
}

int cmd_plot(const std::string& in, const std::string& out) {
    const CsvTable table = parse_csv_table(read_text_file(in));
    write_text_file(out, render_sweep_svg(table));
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qksvm: quantum-kernel SVM experiment toolkit"};
    app.require_subcommand(1);

    // gen-data
    auto* gen = app.add_subcommand("gen-data", "generate a synthetic dataset CSV");
    std::string gen_kind;
    int gen_n = 50;
    double gen_noise = 0.0, gen_spread = 0.5;
    std::string gen_centers;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "blobs|xor|rings|noisy_labels")
        ->required()
        ->check(CLI::IsMember({"blobs", "xor", "rings", "noisy_labels"}));
    gen->add_option("--n", gen_n, "samples per class");
    gen->add_option("--noise", gen_noise, "label-flip fraction");
    gen->add_option("--spread", gen_spread, "blobs spread");
    gen->add_option("--centers", gen_centers, "blobs centers as x:y;x:y");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output CSV path")->required();

    // kernel
    auto* kernel = app.add_subcommand("kernel", "compute a Gram matrix file");
    ConfigFlags kernel_flags;
    add_config_flags(kernel, kernel_flags);
    std::string kernel_out, kernel_format;
    kernel->add_option("--out", kernel_out, "output Gram path")->required();
    kernel->add_option("--format", kernel_format, "csv|json (default from extension)")
        ->check(CLI::IsMember({"csv", "json"}));

    // train-eval
    auto* train = app.add_subcommand("train-eval", "train on the train split, evaluate both splits");
    ConfigFlags train_flags;
    add_config_flags(train, train_flags);
    std::string train_gram, train_prefix = "out/run";
    train->add_option("--gram", train_gram, "precomputed full-dataset Gram (csv or json)");
    train->add_option("--out-prefix", train_prefix, "output prefix for report/model JSON");

    // sweep-depth
    auto* depth = app.add_subcommand("sweep-depth", "train accuracy vs feature-map depth");
    ConfigFlags depth_flags;
    add_config_flags(depth, depth_flags);
    std::vector<int> depth_reps;
    std::string depth_out;
    depth->add_option("--reps-list", depth_reps, "reps grid, e.g. 1,2,3,4,5")
        ->required()
        ->delimiter(',');
    depth->add_option("--out", depth_out, "output sweep CSV")->required();

    // sweep-kernels
    auto* sweepk = app.add_subcommand("sweep-kernels", "kernel x learning-rate grid (sgd)");
    ConfigFlags sweepk_flags;
    add_config_flags(sweepk, sweepk_flags);
    std::vector<std::string> sweepk_kernels;
    std::vector<double> sweepk_rates;
    std::string sweepk_out, sweepk_summary;
    sweepk->add_option("--kernels", sweepk_kernels, "kernel grid, e.g. linear,poly,rbf,sigmoid")
        ->required()
        ->delimiter(',');
    sweepk->add_option("--learning-rates", sweepk_rates, "learning-rate grid, e.g. 0.01,0.1,0.5")
        ->required()
        ->delimiter(',');
    sweepk->add_option("--out", sweepk_out, "output sweep CSV")->required();
    sweepk->add_option("--summary", sweepk_summary, "summary table CSV path");

    // plot
    auto* plot = app.add_subcommand("plot", "render a sweep CSV as a standalone SVG");
    std::string plot_in, plot_out;
    plot->add_option("--in", plot_in, "input sweep CSV")->required();
    plot->add_option("--out", plot_out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
        if (gen->parsed()) {
            return cmd_gen_data(gen_kind, gen_n, gen_noise, gen_spread, gen_centers, gen_seed,
                                gen_out);
        }
        if (kernel->parsed()) return cmd_kernel(kernel_flags, kernel_out, kernel_format);
        if (train->parsed()) return cmd_train_eval(train_flags, train_gram, train_prefix);
        if (depth->parsed()) return cmd_sweep_depth(depth_flags, depth_reps, depth_out);
        if (sweepk->parsed()) {
            return cmd_sweep_kernels(sweepk_flags, sweepk_kernels, sweepk_rates, sweepk_out,
                                     sweepk_summary);
        }
        if (plot->parsed()) return cmd_plot(plot_in, plot_out);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
