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
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qksvm/rng.hpp"

namespace qksvm {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    // RFC-4180 subset: comma-separated, optional double quotes.
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(cell));
            cell.clear();
        } else if (c != '\r') {
            cell += c;
        }
    }
    cells.push_back(std::move(cell));
    return cells;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, const std::string& label_column) {
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open dataset file: " + path.string());
    }
    std::string line;
    if (!std::getline(file, line)) {
        throw std::runtime_error("dataset file is empty: " + path.string());
    }
    const auto header = split_csv_line(line);
    std::ptrdiff_t label_idx = -1;
    std::vector<std::string> feature_names;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (trim(header[c]) == label_column) {
            label_idx = static_cast<std::ptrdiff_t>(c);
        } else {
            feature_names.push_back(trim(header[c]));
        }
    }
    if (label_idx < 0) {
        throw std::runtime_error("label column '" + label_column + "' not found in " +
                                 path.string());
    }

    std::vector<std::vector<double>> rows;
    std::vector<std::string> label_tokens;
    std::size_t line_no = 1;
    while (std::getline(file, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            throw std::runtime_error("row " + std::to_string(line_no) + " has " +
                                     std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(header.size()));
        }
        std::vector<double> features;
        features.reserve(header.size() - 1);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (static_cast<std::ptrdiff_t>(c) == label_idx) continue;
            const std::string cell = trim(cells[c]);
            if (cell.empty()) {
                throw std::runtime_error("blank feature cell at row " + std::to_string(line_no) +
                                         ", column '" + trim(header[c]) + "'");
            }
            std::size_t consumed = 0;
            double value = 0.0;
            try {
                value = std::stod(cell, &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            if (consumed != cell.size()) {
                throw std::runtime_error("non-numeric feature cell '" + cell + "' at row " +
                                         std::to_string(line_no) + ", column '" +
                                         trim(header[c]) + "'");
            }
            features.push_back(value);
        }
        rows.push_back(std::move(features));
        label_tokens.push_back(trim(cells[label_idx]));
    }
    if (rows.empty()) {
        throw std::runtime_error("dataset has no data rows: " + path.string());
    }

    // Catalog: sorted distinct tokens -> contiguous ids, independent of row order.
    std::map<std::string, int> catalog;
    for (const auto& token : label_tokens) catalog.emplace(token, 0);
    int next_id = 0;
    for (auto& [token, id] : catalog) id = next_id++;

    Dataset ds;
    ds.X.resize(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(feature_names.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            ds.X(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
        }
        ds.y.push_back(catalog.at(label_tokens[r]));
    }
    ds.feature_names = feature_names;
    ds.class_names.resize(catalog.size());
    for (const auto& [token, id] : catalog) ds.class_names[id] = token;

    std::string catalog_json = "{";
    for (std::size_t i = 0; i < ds.class_names.size(); ++i) {
        if (i) catalog_json += ',';
        catalog_json += "\"" + ds.class_names[i] + "\":" + std::to_string(i);
    }
    catalog_json += '}';
    ds.provenance = "{\"source\":\"" + path.string() + "\",\"label_column\":\"" + label_column +
                    "\",\"catalog\":" + catalog_json + "}";
    return ds;
}

std::string scaler_kind_name(ScalerKind kind) {
    return kind == ScalerKind::MinMax ? "minmax" : "standard";
}

ScalerKind scaler_kind_from_name(const std::string& name) {
    if (name == "minmax") return ScalerKind::MinMax;
    if (name == "standard") return ScalerKind::Standard;
    throw std::invalid_argument("unknown scaler kind: " + name);
}

ScalerParams fit_scaler(const Dataset& train, ScalerKind kind, double lo, double hi) {
    if (train.size() < 1) throw std::invalid_argument("fit_scaler: empty dataset");
    if (kind == ScalerKind::MinMax && !(hi >= lo)) {
        throw std::invalid_argument("fit_scaler: target range requires hi >= lo");
    }
    ScalerParams params;
    params.kind = kind;
    params.lo = lo;
    params.hi = hi;
    const Eigen::Index d = train.dim();
    params.stat_lo.resize(d);
    params.stat_hi.resize(d);
    for (Eigen::Index c = 0; c < d; ++c) {
        if (kind == ScalerKind::MinMax) {
            params.stat_lo[c] = train.X.col(c).minCoeff();
            params.stat_hi[c] = train.X.col(c).maxCoeff();
        } else {
            const double mean = train.X.col(c).mean();
            const double var =
                (train.X.col(c).array() - mean).square().sum() / train.size();
            params.stat_lo[c] = mean;
            params.stat_hi[c] = std::sqrt(var);
        }
    }
    return params;
}

FeatureMatrix apply_scaler(const ScalerParams& params, const FeatureMatrix& X) {
    if (static_cast<std::size_t>(X.cols()) != params.stat_lo.size()) {
        throw std::invalid_argument("apply_scaler: feature-count mismatch");
    }
    FeatureMatrix out(X.rows(), X.cols());
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
        if (params.kind == ScalerKind::MinMax) {
            const double span = params.stat_hi[c] - params.stat_lo[c];
            for (Eigen::Index r = 0; r < X.rows(); ++r) {
                out(r, c) = span == 0.0
                                ? params.lo
                                : params.lo + (params.hi - params.lo) *
                                                  ((X(r, c) - params.stat_lo[c]) / span);
            }
        } else {
            const double stddev = params.stat_hi[c];
            for (Eigen::Index r = 0; r < X.rows(); ++r) {
                out(r, c) = stddev == 0.0 ? 0.0 : (X(r, c) - params.stat_lo[c]) / stddev;
            }
        }
    }
    return out;
}

PcaParams fit_pca(const Dataset& train, int k) {
    const Eigen::Index m = train.size();
    const Eigen::Index d = train.dim();
    if (k < 1 || k > d) {
        throw std::invalid_argument("fit_pca: k must be in [1, " + std::to_string(d) + "]");
    }
    if (m < 2) throw std::invalid_argument("fit_pca: need at least 2 samples");

    PcaParams params;
    params.mean = train.X.colwise().mean().transpose();
    Eigen::MatrixXd centered = train.X;
    centered.rowwise() -= params.mean.transpose();
    const Eigen::MatrixXd cov =
        centered.transpose() * centered / static_cast<double>(m - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("fit_pca: eigensolver failed");
    }
    // Eigenvalues come back ascending; take the top k in descending order.
    params.components.resize(k, d);
    for (int r = 0; r < k; ++r) {
        Eigen::VectorXd component = solver.eigenvectors().col(d - 1 - r);
        Eigen::Index peak = 0;
        component.cwiseAbs().maxCoeff(&peak);
        if (component(peak) < 0.0) component = -component;
        params.components.row(r) = component.transpose();
    }
    return params;
}

FeatureMatrix apply_pca(const PcaParams& params, const FeatureMatrix& X) {
    if (X.cols() != params.mean.size()) {
        throw std::invalid_argument("apply_pca: feature-count mismatch");
    }
    Eigen::MatrixXd centered = X;
    centered.rowwise() -= params.mean.transpose();
    return FeatureMatrix(centered * params.components.transpose());
}

SplitIndices stratified_split_indices(const std::vector<int>& y, double train_fraction,
                                      std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw std::invalid_argument("train_fraction must be in (0, 1)");
    }
    std::map<int, std::vector<Eigen::Index>> by_class;
    for (std::size_t i = 0; i < y.size(); ++i) {
        by_class[y[i]].push_back(static_cast<Eigen::Index>(i));
    }
    for (const auto& [cls, indices] : by_class) {
        if (indices.size() < 2) {
            throw std::invalid_argument("class " + std::to_string(cls) +
                                        " has fewer than 2 samples, cannot split");
        }
    }
    Rng rng(seed);
    SplitIndices split;
    for (auto& [cls, indices] : by_class) {
        const auto count = static_cast<long>(indices.size());
        long n_train = std::lround(train_fraction * static_cast<double>(count));
        n_train = std::clamp(n_train, 1L, count - 1);
        rng.shuffle(indices);
        split.train.insert(split.train.end(), indices.begin(), indices.begin() + n_train);
        split.test.insert(split.test.end(), indices.begin() + n_train, indices.end());
    }
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.test.begin(), split.test.end());
    return split;
}

Dataset take_rows(const Dataset& ds, const std::vector<Eigen::Index>& indices) {
    Dataset out;
    out.X.resize(static_cast<Eigen::Index>(indices.size()), ds.dim());
    out.y.reserve(indices.size());
    for (std::size_t r = 0; r < indices.size(); ++r) {
        out.X.row(static_cast<Eigen::Index>(r)) = ds.X.row(indices[r]);
        out.y.push_back(ds.y[indices[r]]);
    }
    out.feature_names = ds.feature_names;
    out.class_names = ds.class_names;
    out.provenance = ds.provenance;
    return out;
}

std::pair<Dataset, Dataset> stratified_split(const Dataset& ds, double train_fraction,
                                             std::uint64_t seed) {
    const SplitIndices split = stratified_split_indices(ds.y, train_fraction, seed);
    return {take_rows(ds, split.train), take_rows(ds, split.test)};
}

namespace {

Dataset finish_generated(FeatureMatrix X, std::vector<int> y, int n_classes,
                         std::string provenance) {
    Dataset ds;
    ds.X = std::move(X);
    ds.y = std::move(y);
    for (int c = 0; c < n_classes; ++c) ds.class_names.push_back(std::to_string(c));
    ds.feature_names.clear();
    for (Eigen::Index c = 0; c < ds.X.cols(); ++c) {
        ds.feature_names.push_back("f" + std::to_string(c + 1));
    }
    ds.provenance = std::move(provenance);
    return ds;
}

void flip_labels(std::vector<int>& y, int n_classes, double noise, Rng& rng) {
    if (noise <= 0.0) return;
    const auto n_flip =
        static_cast<std::size_t>(std::lround(noise * static_cast<double>(y.size())));
    std::vector<std::size_t> order(y.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);
    for (std::size_t k = 0; k < n_flip && k < order.size(); ++k) {
        const std::size_t i = order[k];
        if (n_classes == 2) {
            y[i] = 1 - y[i];
        } else {
            const int shift = 1 + static_cast<int>(rng.uniform_index(n_classes - 1));
            y[i] = (y[i] + shift) % n_classes;
        }
    }
}

}  // namespace

Dataset gen_blobs(int n_per_class, const std::vector<std::vector<double>>& centers,
                  double spread, std::uint64_t seed) {
    if (n_per_class < 1) throw std::invalid_argument("gen_blobs: n_per_class must be >= 1");
    if (centers.size() < 2) throw std::invalid_argument("gen_blobs: need at least 2 centers");
    if (!(spread > 0.0)) throw std::invalid_argument("gen_blobs: spread must be > 0");
    const std::size_t d = centers.front().size();
    if (d == 0) throw std::invalid_argument("gen_blobs: centers must be non-empty vectors");
    for (const auto& c : centers) {
        if (c.size() != d) throw std::invalid_argument("gen_blobs: centers differ in dimension");
    }

    Rng rng(seed);
    const auto n_classes = static_cast<int>(centers.size());
    FeatureMatrix X(static_cast<Eigen::Index>(n_per_class) * n_classes,
                    static_cast<Eigen::Index>(d));
    std::vector<int> y;
    Eigen::Index row = 0;
    for (int cls = 0; cls < n_classes; ++cls) {
        for (int i = 0; i < n_per_class; ++i, ++row) {
            for (std::size_t c = 0; c < d; ++c) {
                X(row, static_cast<Eigen::Index>(c)) = centers[cls][c] + spread * rng.normal();
            }
            y.push_back(cls);
        }
    }
    char prov[160];
    std::snprintf(prov, sizeof(prov),
                  "{\"generator\":\"blobs\",\"n_per_class\":%d,\"spread\":%.17g,\"seed\":%llu}",
                  n_per_class, spread, static_cast<unsigned long long>(seed));
    return finish_generated(std::move(X), std::move(y), n_classes, prov);
}

std::string hard_kind_name(HardKind kind) {
    switch (kind) {
        case HardKind::Xor: return "xor";
        case HardKind::Rings: return "rings";
        case HardKind::NoisyLabels: return "noisy_labels";
    }
    throw std::invalid_argument("hard_kind_name: unknown kind");
}

HardKind hard_kind_from_name(const std::string& name) {
    if (name == "xor") return HardKind::Xor;
    if (name == "rings") return HardKind::Rings;
    if (name == "noisy_labels") return HardKind::NoisyLabels;
    throw std::invalid_argument("unknown hard dataset kind: " + name);
}

Dataset gen_hard(int n_per_class, HardKind kind, double noise, std::uint64_t seed) {
    if (n_per_class < 10) throw std::invalid_argument("gen_hard: n_per_class must be >= 10");
    if (noise < 0.0 || noise >= 1.0) {
        throw std::invalid_argument("gen_hard: noise must be in [0, 1)");
    }

    Rng rng(seed);
    const Eigen::Index m = 2 * static_cast<Eigen::Index>(n_per_class);
    FeatureMatrix X(m, 2);
    std::vector<int> y;
    y.reserve(m);

    switch (kind) {
        case HardKind::Xor: {
            // Four-quadrant parity: Gaussian clusters at (+-0.6, +-0.6),
            // resampled to stay inside their quadrant. Class 0 owns the
            // same-sign quadrants, class 1 the opposite-sign ones.
            constexpr double center = 0.6;
            constexpr double spread = 0.15;
            Eigen::Index row = 0;
            for (int cls = 0; cls < 2; ++cls) {
                for (int i = 0; i < n_per_class; ++i, ++row) {
                    const double cx = (i % 2 == 0) ? center : -center;
                    const double cy = cls == 0 ? cx : -cx;
                    double a, b;
                    do {
                        a = cx + spread * rng.normal();
                        b = cy + spread * rng.normal();
                    } while (a * cx <= 0.0 || b * cy <= 0.0);
                    X(row, 0) = a;
                    X(row, 1) = b;
                    y.push_back(cls);
                }
            }
            break;
        }
        case HardKind::Rings: {
            constexpr double two_pi = 2.0 * std::numbers::pi;
            Eigen::Index row = 0;
            for (int cls = 0; cls < 2; ++cls) {
                const double r_lo = cls == 0 ? 0.1 : 0.8;
                const double r_hi = cls == 0 ? 0.4 : 1.1;
                for (int i = 0; i < n_per_class; ++i, ++row) {
                    const double radius = rng.uniform(r_lo, r_hi);
                    const double angle = rng.uniform(0.0, two_pi);
                    X(row, 0) = radius * std::cos(angle);
                    X(row, 1) = radius * std::sin(angle);
                    y.push_back(cls);
                }
            }
            break;
        }
        case HardKind::NoisyLabels: {
            Eigen::Index row = 0;
            for (int cls = 0; cls < 2; ++cls) {
                const double center = cls == 0 ? -1.0 : 1.0;
                for (int i = 0; i < n_per_class; ++i, ++row) {
                    X(row, 0) = center + 0.5 * rng.normal();
                    X(row, 1) = center + 0.5 * rng.normal();
                    y.push_back(cls);
                }
            }
            break;
        }
    }

    flip_labels(y, 2, noise, rng);

    char prov[192];
    std::snprintf(
        prov, sizeof(prov),
        "{\"generator\":\"%s\",\"n_per_class\":%d,\"noise\":%.17g,\"seed\":%llu}",
        hard_kind_name(kind).c_str(), n_per_class, noise,
        static_cast<unsigned long long>(seed));
    return finish_generated(std::move(X), std::move(y), 2, prov);
}

}  // namespace qksvm
