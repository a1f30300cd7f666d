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

#pragma once

#include <string>
#include <vector>

namespace qksvm {

struct EvalReport {
    std::vector<std::vector<long>> confusion;  // rows = true class, cols = predicted
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::string averaging;  // "binary" (positive class = 1) or "macro"
};

/// Confusion matrix plus accuracy/precision/recall/F1. Binary problems
/// report the positive class (class 1); multiclass reports macro averages.
/// Zero denominators yield 0 so the report is always total.
EvalReport evaluate(const std::vector<int>& y_true, const std::vector<int>& y_pred,
                    int n_classes);

}  // namespace qksvm
