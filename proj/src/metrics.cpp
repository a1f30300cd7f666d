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

#include "qksvm/metrics.hpp"

#include <array>
#include <stdexcept>

namespace qksvm {

EvalReport evaluate(const std::vector<int>& y_true, const std::vector<int>& y_pred,
                    int n_classes) {
    if (y_true.size() != y_pred.size()) {
        throw std::invalid_argument("evaluate: label vectors differ in length");
    }
    if (y_true.empty()) throw std::invalid_argument("evaluate: empty input");
    if (n_classes < 2) throw std::invalid_argument("evaluate: need at least 2 classes");

    EvalReport report;
    report.confusion.assign(n_classes, std::vector<long>(n_classes, 0));
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        if (y_true[i] < 0 || y_true[i] >= n_classes || y_pred[i] < 0 ||
            y_pred[i] >= n_classes) {
            throw std::invalid_argument("evaluate: label outside [0, n_classes)");
        }
        ++report.confusion[y_true[i]][y_pred[i]];
    }

    long correct = 0;
    for (int c = 0; c < n_classes; ++c) correct += report.confusion[c][c];
    report.accuracy = static_cast<double>(correct) / static_cast<double>(y_true.size());

    const auto class_scores = [&](int cls) {
        long tp = report.confusion[cls][cls];
        long fp = 0, fn = 0;
        for (int c = 0; c < n_classes; ++c) {
            if (c == cls) continue;
            fp += report.confusion[c][cls];
            fn += report.confusion[cls][c];
        }
        const double precision =
            (tp + fp) == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
        const double recall =
            (tp + fn) == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
        const double f1 = (precision + recall) == 0.0
                              ? 0.0
                              : 2.0 * precision * recall / (precision + recall);
        return std::array<double, 3>{precision, recall, f1};
    };

    if (n_classes == 2) {
        const auto scores = class_scores(1);
        report.precision = scores[0];
        report.recall = scores[1];
        report.f1 = scores[2];
        report.averaging = "binary";
    } else {
        double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0;
        for (int c = 0; c < n_classes; ++c) {
            const auto scores = class_scores(c);
            sum_p += scores[0];
            sum_r += scores[1];
            sum_f += scores[2];
        }
        report.precision = sum_p / n_classes;
        report.recall = sum_r / n_classes;
        report.f1 = sum_f / n_classes;
        report.averaging = "macro";
    }
    return report;
}

}  // namespace qksvm
