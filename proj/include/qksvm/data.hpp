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
 * Dataset ingestion, synthetic generation, preprocessing (scaling, PCA),
 * and stratified splitting.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qksvm/kernels.hpp"

namespace qksvm {

struct Dataset {
    FeatureMatrix X;                         // m x d
    std::vector<int> y;                      // class ids, contiguous from 0
    std::vector<std::string> feature_names;  // optional, may be empty
    std::vector<std::string> class_names;    // class id -> original label token
    std::string provenance;                  // JSON text: source path or generator+seed

    Eigen::Index size() const { return X.rows(); }
    Eigen::Index dim() const { return X.cols(); }
    int n_classes() const { return static_cast<int>(class_names.size()); }
};

/// Loads a CSV with a header row. Features are the columns in file order
/// minus the label column; label tokens map to a contiguous 0-based catalog
/// in sorted order (recorded in class_names and provenance). Throws
/// std::runtime_error naming the row/column on malformed input.
Dataset load_csv(const std::filesystem::path& path, const std::string& label_column = "label");

enum class ScalerKind { MinMax, Standard };

std::string scaler_kind_name(ScalerKind kind);
ScalerKind scaler_kind_from_name(const std::string& name);

struct ScalerParams {
    ScalerKind kind = ScalerKind::MinMax;
    std::vector<double> stat_lo;  // per-feature min (minmax) or mean (standard)
    std::vector<double> stat_hi;  // per-feature max (minmax) or stddev (standard)
    double lo = 0.0;              // minmax target range
    double hi = 1.0;
};

/// Fit on the training split only. For minmax, a constant feature maps to
/// lo; for standard, to 0. Values outside the training range map linearly
/// beyond [lo, hi] (no clipping).
ScalerParams fit_scaler(const Dataset& train, ScalerKind kind, double lo = 0.0, double hi = 1.0);
FeatureMatrix apply_scaler(const ScalerParams& params, const FeatureMatrix& X);

struct PcaParams {
    Eigen::VectorXd mean;       // length d
    Eigen::MatrixXd components; // k x d, rows orthonormal, descending variance
};

/// Top-k eigenvectors of the training covariance; sign convention: the
/// largest-magnitude entry of each component is positive.
PcaParams fit_pca(const Dataset& train, int k);
FeatureMatrix apply_pca(const PcaParams& params, const FeatureMatrix& X);

struct SplitIndices {
    std::vector<Eigen::Index> train;
    std::vector<Eigen::Index> test;
};

/// Per-class counts split as round(train_fraction * class_count), keeping
/// at least 1 sample per class per side. Deterministic given seed.
SplitIndices stratified_split_indices(const std::vector<int>& y, double train_fraction,
                                      std::uint64_t seed);
std::pair<Dataset, Dataset> stratified_split(const Dataset& ds, double train_fraction,
                                             std::uint64_t seed);

/// Gaussian clusters around the given centers, n_per_class points each.
Dataset gen_blobs(int n_per_class, const std::vector<std::vector<double>>& centers,
                  double spread, std::uint64_t seed);

enum class HardKind { Xor, Rings, NoisyLabels };

std::string hard_kind_name(HardKind kind);
HardKind hard_kind_from_name(const std::string& name);

/// Deliberately hard 2-D datasets:
///   xor          four-quadrant parity classes (coordinates keep a margin of
///                0.2 away from the axes so the parity is well defined)
///   rings        two concentric annuli
///   noisy_labels two Gaussian blobs
/// `noise` is the fraction of labels flipped after generation, for every kind.
Dataset gen_hard(int n_per_class, HardKind kind, double noise, std::uint64_t seed);

/// Extracts the rows/labels at `indices` as a new Dataset.
Dataset take_rows(const Dataset& ds, const std::vector<Eigen::Index>& indices);

}  // namespace qksvm
