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

#include "qksvm/data.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>

#include "doctest.h"
#include "qksvm/svm.hpp"

using namespace qksvm;

namespace {

std::filesystem::path write_temp_csv(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << text;
    return path;
}

std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(QKSVM_SOURCE_DIR) / "data" / name;
}

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_SUITE("data") {

TEST_CASE("load_csv maps features and labels") {
    const auto path = write_temp_csv("qksvm_basic.csv",
                                     "f1,f2,label\n"
                                     "1.0,2.0,B\n"
                                     "3.5,4.5,M\n"
                                     "0.5,0.25,B\n");
    const Dataset ds = load_csv(path, "label");
    CHECK(ds.size() == 3);
    CHECK(ds.dim() == 2);
    CHECK(ds.feature_names == std::vector<std::string>{"f1", "f2"});
    CHECK(ds.class_names == std::vector<std::string>{"B", "M"});  // sorted catalog
    CHECK(ds.y == std::vector<int>{0, 1, 0});
    CHECK(ds.X(1, 0) == 3.5);
    CHECK(ds.provenance.find("\"B\":0") != std::string::npos);
}

TEST_CASE("load_csv errors name the offending cell") {
    const auto blank = write_temp_csv("qksvm_blank.csv", "a,b,label\n1.0,,x\n");
    CHECK_THROWS_WITH_AS(load_csv(blank, "label"),
                         doctest::Contains("column 'b'"), std::runtime_error);

    const auto word = write_temp_csv("qksvm_word.csv", "a,b,label\n1.0,fish,x\n");
    CHECK_THROWS_WITH_AS(load_csv(word, "label"), doctest::Contains("fish"),
                         std::runtime_error);

    CHECK_THROWS_AS(load_csv("/nonexistent/f.csv", "label"), std::runtime_error);
    const auto ok = write_temp_csv("qksvm_ok.csv", "a,b,label\n1.0,2.0,x\n");
    CHECK_THROWS_AS(load_csv(ok, "target"), std::runtime_error);
}

TEST_CASE("minmax scaler maps the training range onto the target range") {
    Dataset train;
    train.X.resize(3, 1);
    train.X << 0.0, 5.0, 10.0;
    train.y = {0, 1, 0};
    train.class_names = {"0", "1"};

    const ScalerParams params = fit_scaler(train, ScalerKind::MinMax, 0.0, kPi);
    const FeatureMatrix scaled = apply_scaler(params, train.X);
    CHECK(scaled(0, 0) == 0.0);
    CHECK(scaled(1, 0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(scaled(2, 0) == kPi);

    // out-of-range values extrapolate linearly, no clipping
    FeatureMatrix beyond(2, 1);
    beyond << -5.0, 20.0;
    const FeatureMatrix mapped = apply_scaler(params, beyond);
    CHECK(mapped(0, 0) == doctest::Approx(-kPi / 2));
    CHECK(mapped(1, 0) == doctest::Approx(2.0 * kPi));
}

TEST_CASE("degenerate columns scale to the documented constants") {
    Dataset train;
    train.X.resize(3, 2);
    train.X << 3.0, 1.0, 3.0, 2.0, 3.0, 3.0;
    train.y = {0, 0, 1};
    train.class_names = {"0", "1"};

    const FeatureMatrix mm =
        apply_scaler(fit_scaler(train, ScalerKind::MinMax, 0.0, 1.0), train.X);
    CHECK(mm(0, 0) == 0.0);
    CHECK(mm(1, 0) == 0.0);
    CHECK(mm(2, 0) == 0.0);

    const FeatureMatrix st =
        apply_scaler(fit_scaler(train, ScalerKind::Standard), train.X);
    CHECK(st(0, 0) == 0.0);
    // the varying column standardizes to zero mean, unit population stddev
    CHECK(st.col(1).mean() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK((st.col(1).array().square().sum() / 3.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("after minmax to [0, pi] every training feature is inside exactly") {
    const Dataset ds = gen_blobs(25, {{-4.0, 1.0}, {3.0, -2.0}}, 1.7, 99);
    const ScalerParams params = fit_scaler(ds, ScalerKind::MinMax, 0.0, kPi);
    const FeatureMatrix scaled = apply_scaler(params, ds.X);
    CHECK(scaled.minCoeff() >= 0.0);
    CHECK(scaled.maxCoeff() <= kPi);
    CHECK(scaled.minCoeff() == 0.0);
    CHECK(scaled.maxCoeff() == kPi);
}

TEST_CASE("pca with k=d preserves pairwise distances") {
    const Dataset ds = gen_blobs(10, {{0.0, 0.0, 0.0}, {1.0, 2.0, 3.0}}, 0.9, 4);
    const PcaParams pca = fit_pca(ds, 3);
    const FeatureMatrix projected = apply_pca(pca, ds.X);
    for (Eigen::Index i = 0; i < ds.size(); i += 3) {
        for (Eigen::Index j = 0; j < i; j += 2) {
            const double before = (ds.X.row(i) - ds.X.row(j)).norm();
            const double after = (projected.row(i) - projected.row(j)).norm();
            CHECK(std::abs(before - after) <= 1e-9);
        }
    }
    // components are orthonormal
    const Eigen::MatrixXd gram = pca.components * pca.components.transpose();
    CHECK((gram - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("pca on collinear points reconstructs exactly with k=1") {
    Dataset ds;
    ds.X.resize(4, 2);
    ds.X << 0.0, 0.0, 1.0, 2.0, 2.0, 4.0, 3.0, 6.0;  // y = 2x
    ds.y = {0, 0, 1, 1};
    ds.class_names = {"0", "1"};
    const PcaParams pca = fit_pca(ds, 1);
    const FeatureMatrix z = apply_pca(pca, ds.X);
    // reconstruct: mean + z * component
    for (Eigen::Index i = 0; i < 4; ++i) {
        const Eigen::Vector2d rec =
            pca.mean + z(i, 0) * pca.components.row(0).transpose();
        CHECK((rec.transpose() - ds.X.row(i)).norm() <= 1e-9);
    }
    // deterministic sign: largest-magnitude entry positive
    CHECK(pca.components.row(0).cwiseAbs().maxCoeff() ==
          doctest::Approx(pca.components.row(0).maxCoeff()));
}

TEST_CASE("pca rejects k outside [1, d]") {
    const Dataset ds = gen_blobs(5, {{0.0, 0.0}, {1.0, 1.0}}, 0.5, 1);
    CHECK_THROWS_AS(fit_pca(ds, 3), std::invalid_argument);
    CHECK_THROWS_AS(fit_pca(ds, 0), std::invalid_argument);
}

TEST_CASE("breast cancer fixture reduces from 30 features to 2") {
    const Dataset ds = load_csv(fixture("breast_cancer.csv"), "label");
    CHECK(ds.size() == 569);
    CHECK(ds.dim() == 30);
    CHECK(ds.class_names == std::vector<std::string>{"benign", "malignant"});
    const PcaParams pca = fit_pca(ds, 2);
    const FeatureMatrix reduced = apply_pca(pca, ds.X);
    CHECK(reduced.rows() == 569);
    CHECK(reduced.cols() == 2);
}

TEST_CASE("stratified split keeps class proportions") {
    const Dataset ds = gen_blobs(50, {{-1.0, 0.0}, {1.0, 0.0}}, 0.3, 6);  // 50/50
    const auto [train, test] = stratified_split(ds, 0.8, 42);
    CHECK(train.size() == 80);
    CHECK(test.size() == 20);
    CHECK(std::count(train.y.begin(), train.y.end(), 0) == 40);
    CHECK(std::count(train.y.begin(), train.y.end(), 1) == 40);
    CHECK(std::count(test.y.begin(), test.y.end(), 0) == 10);
    CHECK(std::count(test.y.begin(), test.y.end(), 1) == 10);
}

TEST_CASE("split indices are disjoint, complete, and seed-deterministic") {
    const Dataset ds = gen_hard(23, HardKind::Rings, 0.0, 15);
    const SplitIndices a = stratified_split_indices(ds.y, 0.7, 9);
    const SplitIndices b = stratified_split_indices(ds.y, 0.7, 9);
    CHECK(a.train == b.train);
    CHECK(a.test == b.test);

    std::set<Eigen::Index> all(a.train.begin(), a.train.end());
    for (const auto i : a.test) {
        CHECK(all.find(i) == all.end());
        all.insert(i);
    }
    CHECK(all.size() == static_cast<std::size_t>(ds.size()));

    const SplitIndices c = stratified_split_indices(ds.y, 0.7, 10);
    CHECK(a.train != c.train);  // a different seed reshuffles
}

TEST_CASE("split rejects classes with a single sample") {
    std::vector<int> y{0, 0, 0, 1};
    CHECK_THROWS_AS(stratified_split_indices(y, 0.8, 1), std::invalid_argument);
    CHECK_THROWS_AS(stratified_split_indices({0, 0, 1, 1}, 1.0, 1), std::invalid_argument);
}

TEST_CASE("well-separated blobs are linearly separable") {
    const Dataset ds = gen_blobs(30, {{-5.0, -5.0}, {5.0, 5.0}}, 0.5, 8);
    ClassicalKernelParams linear;
    linear.kind = ClassicalKind::Linear;
    const KernelMatrix K = classical_gram(ds.X, linear);
    std::vector<int> y(ds.y.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = ds.y[i] == 1 ? 1 : -1;
    TrainConfig cfg;
    cfg.C = 1.0;
    cfg.seed = 2;
    const SvmModel model = train_smo(K, y, cfg);
    FeatureMatrix rows = K.values;
    CHECK(predict(model, rows) == y);
}

TEST_CASE("generators are pure functions of their seed") {
    const Dataset a = gen_blobs(12, {{0.0, 1.0}, {2.0, 3.0}}, 0.4, 31);
    const Dataset b = gen_blobs(12, {{0.0, 1.0}, {2.0, 3.0}}, 0.4, 31);
    CHECK(a.X == b.X);
    CHECK(a.y == b.y);

    for (const HardKind kind : {HardKind::Xor, HardKind::Rings, HardKind::NoisyLabels}) {
        const Dataset h1 = gen_hard(11, kind, 0.1, 77);
        const Dataset h2 = gen_hard(11, kind, 0.1, 77);
        CHECK(h1.X == h2.X);
        CHECK(h1.y == h2.y);
    }
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(gen_blobs(10, {{0.0, 0.0}, {1.0, 1.0}}, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_blobs(10, {{0.0, 0.0}}, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_hard(9, HardKind::Xor, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_hard(50, HardKind::Xor, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(hard_kind_from_name("spiral"), std::invalid_argument);
}

TEST_CASE("xor defeats the linear kernel but rings fall to rbf") {
    const auto held_out_accuracy = [](const Dataset& ds, const ClassicalKernelParams& params,
                                      std::uint64_t seed) {
        const auto [train, test] = stratified_split(ds, 0.8, seed);
        std::vector<int> y(train.y.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = train.y[i] == 1 ? 1 : -1;
        TrainConfig cfg;
        cfg.seed = seed;
        const SvmModel model = train_smo(classical_gram(train.X, params), y, cfg);
        const auto pred = predict(model, cross_gram(test.X, train.X, params));
        int correct = 0;
        for (std::size_t i = 0; i < pred.size(); ++i) {
            correct += pred[i] == (test.y[i] == 1 ? 1 : -1);
        }
        return static_cast<double>(correct) / pred.size();
    };

    ClassicalKernelParams linear;
    linear.kind = ClassicalKind::Linear;
    const Dataset xor_ds = gen_hard(60, HardKind::Xor, 0.0, 3);
    CHECK(held_out_accuracy(xor_ds, linear, 3) <= 0.6);  // near chance

    ClassicalKernelParams rbf;
    rbf.kind = ClassicalKind::Rbf;
    rbf.gamma = default_gamma(2);
    const Dataset rings = gen_hard(60, HardKind::Rings, 0.0, 3);
    CHECK(held_out_accuracy(rings, rbf, 3) >= 0.9);
}

TEST_CASE("noisy_labels flips the requested fraction") {
    const Dataset clean = gen_hard(50, HardKind::NoisyLabels, 0.0, 12);
    const Dataset noisy = gen_hard(50, HardKind::NoisyLabels, 0.2, 12);
    CHECK(clean.X == noisy.X);  // same points, only labels differ
    int flips = 0;
    for (std::size_t i = 0; i < clean.y.size(); ++i) flips += clean.y[i] != noisy.y[i];
    CHECK(flips == 20);  // 0.2 * 100
}

}  // TEST_SUITE
