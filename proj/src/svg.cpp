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

#include "qksvm/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qksvm {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 32.0;
constexpr double kMarginBottom = 96.0;

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

bool parse_number(const std::string& cell, double& out) {
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
    return ec == std::errc{} && ptr == cell.data() + cell.size();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

CsvTable parse_csv_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CsvTable table;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const auto comma = line.find(',', pos);
            cells.push_back(line.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (table.columns.empty()) {
            table.columns = std::move(cells);
        } else {
            if (cells.size() != table.columns.size()) {
                throw std::runtime_error("csv line " + std::to_string(line_no) + " has " +
                                         std::to_string(cells.size()) + " cells, expected " +
                                         std::to_string(table.columns.size()));
            }
            table.rows.push_back(std::move(cells));
        }
    }
    if (table.columns.empty()) throw std::runtime_error("csv has no header row");
    return table;
}

std::string render_sweep_svg(const CsvTable& table) {
    if (table.columns.size() < 2) {
        throw std::runtime_error("chart needs at least 2 columns");
    }
    if (table.rows.empty()) throw std::runtime_error("chart needs at least 1 data row");

    const std::size_t n_columns = table.columns.size();
    const std::size_t n_series = std::min<std::size_t>(2, n_columns - 1);
    const std::size_t first_series = n_columns - n_series;

    // Numeric first column selects line mode.
    double probe = 0.0;
    bool line_mode = true;
    for (const auto& row : table.rows) {
        if (!parse_number(row[0], probe)) {
            line_mode = false;
            break;
        }
    }

    std::vector<std::vector<double>> series(n_series);
    std::vector<double> xs;
    std::vector<std::string> labels;
    for (const auto& row : table.rows) {
        for (std::size_t s = 0; s < n_series; ++s) {
            double v = 0.0;
            if (!parse_number(row[first_series + s], v)) {
                throw std::runtime_error("non-numeric series cell '" + row[first_series + s] +
                                         "'");
            }
            series[s].push_back(v);
        }
        if (line_mode) {
            parse_number(row[0], probe);
            xs.push_back(probe);
        } else {
            std::string label = row[0];
            for (std::size_t c = 1; c < first_series; ++c) label += "/" + row[c];
            labels.push_back(label);
        }
    }

    double y_min = 0.0, y_max = 1.0;
    for (const auto& s : series) {
        for (double v : s) {
            y_min = std::min(y_min, v);
            y_max = std::max(y_max, v);
        }
    }
    if (y_max == y_min) y_max = y_min + 1.0;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const auto y_pos = [&](double v) {
        return kMarginTop + plot_h * (1.0 - (v - y_min) / (y_max - y_min));
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    svg += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";

    // Axes and horizontal grid.
    svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kMarginTop) + "\" x2=\"" +
           fmt(kMarginLeft) + "\" y2=\"" + fmt(kMarginTop + plot_h) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kMarginTop + plot_h) +
           "\" x2=\"" + fmt(kMarginLeft + plot_w) + "\" y2=\"" + fmt(kMarginTop + plot_h) +
           "\" stroke=\"black\"/>\n";
    for (int tick = 0; tick <= 4; ++tick) {
        const double v = y_min + (y_max - y_min) * tick / 4.0;
        const double y = y_pos(v);
        svg += "<line x1=\"" + fmt(kMarginLeft - 4) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
               fmt(kMarginLeft + plot_w) + "\" y2=\"" + fmt(y) +
               "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + fmt(kMarginLeft - 8) + "\" y=\"" + fmt(y + 4) +
               "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">" +
               fmt(v) + "</text>\n";
    }

    const std::size_t n_rows = table.rows.size();
    const auto x_slot = [&](std::size_t i) {
        if (line_mode && n_rows > 1) {
            double x_lo = xs.front(), x_hi = xs.back();
            for (double x : xs) {
                x_lo = std::min(x_lo, x);
                x_hi = std::max(x_hi, x);
            }
            if (x_hi == x_lo) return kMarginLeft + plot_w / 2.0;
            return kMarginLeft + plot_w * (xs[i] - x_lo) / (x_hi - x_lo);
        }
        return kMarginLeft + plot_w * (static_cast<double>(i) + 0.5) / n_rows;
    };

    if (line_mode) {
        for (std::size_t s = 0; s < n_series; ++s) {
            std::string points;
            for (std::size_t i = 0; i < n_rows; ++i) {
                if (i) points += ' ';
                points += fmt(x_slot(i)) + "," + fmt(y_pos(series[s][i]));
            }
            svg += std::string("<polyline fill=\"none\" stroke=\"") + kSeriesColors[s % 4] +
                   "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
            for (std::size_t i = 0; i < n_rows; ++i) {
                svg += std::string("<circle cx=\"") + fmt(x_slot(i)) + "\" cy=\"" +
                       fmt(y_pos(series[s][i])) + "\" r=\"3\" fill=\"" +
                       kSeriesColors[s % 4] + "\"/>\n";
            }
        }
        for (std::size_t i = 0; i < n_rows; ++i) {
            svg += "<text x=\"" + fmt(x_slot(i)) + "\" y=\"" + fmt(kMarginTop + plot_h + 16) +
                   "\" text-anchor=\"middle\" font-size=\"12\" "
                   "font-family=\"sans-serif\">" +
                   escape_xml(table.rows[i][0]) + "</text>\n";
        }
    } else {
        const double slot_w = plot_w / n_rows;
        const double bar_w = slot_w / (n_series + 1);
        for (std::size_t i = 0; i < n_rows; ++i) {
            for (std::size_t s = 0; s < n_series; ++s) {
                const double x =
                    kMarginLeft + slot_w * i + bar_w * (s + 0.5);
                const double top = y_pos(series[s][i]);
                const double base = y_pos(std::max(0.0, y_min));
                svg += std::string("<rect x=\"") + fmt(x) + "\" y=\"" +
                       fmt(std::min(top, base)) + "\" width=\"" + fmt(bar_w) +
                       "\" height=\"" + fmt(std::abs(base - top)) + "\" fill=\"" +
                       kSeriesColors[s % 4] + "\"/>\n";
            }
            svg += "<text x=\"" + fmt(kMarginLeft + slot_w * (i + 0.5)) + "\" y=\"" +
                   fmt(kMarginTop + plot_h + 14) +
                   "\" text-anchor=\"end\" font-size=\"10\" font-family=\"sans-serif\" "
                   "transform=\"rotate(-35 " +
                   fmt(kMarginLeft + slot_w * (i + 0.5)) + " " +
                   fmt(kMarginTop + plot_h + 14) + ")\">" +
                   escape_xml(labels[i]) + "</text>\n";
        }
    }

    // Legend names the plotted series.
    for (std::size_t s = 0; s < n_series; ++s) {
        const double x = kMarginLeft + 12 + 150.0 * static_cast<double>(s);
        svg += std::string("<rect x=\"") + fmt(x) + "\" y=\"" + fmt(kMarginTop - 20) +
               "\" width=\"12\" height=\"12\" fill=\"" + kSeriesColors[s % 4] + "\"/>\n";
        svg += "<text x=\"" + fmt(x + 16) + "\" y=\"" + fmt(kMarginTop - 10) +
               "\" font-size=\"12\" font-family=\"sans-serif\">" +
               escape_xml(table.columns[first_series + s]) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace qksvm
