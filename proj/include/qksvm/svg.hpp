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
 * Self-contained SVG chart emitter. Identical input produces identical
 * bytes; no external renderer.
 *
 * Input is a sweep CSV with a header row. When the first column is numeric
 * it becomes the x axis of a line chart; otherwise each row becomes one
 * labelled slot of a bar chart (label = all columns before the series,
 * joined with '/'). The last two columns are always the plotted series.
 */

#pragma once

#include <string>
#include <vector>

namespace qksvm {

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Parses a header+rows CSV; throws std::runtime_error naming the bad line.
CsvTable parse_csv_table(const std::string& text);

/// Renders the chart described above; throws on tables with < 1 data row
/// or < 2 columns.
std::string render_sweep_svg(const CsvTable& table);

}  // namespace qksvm
