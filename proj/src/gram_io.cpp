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

#include "qksvm/gram_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qksvm {

std::string fmt_double(double value) {
    char buf[40];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

std::string gram_to_csv(const KernelMatrix& K) {
    std::string out = "# kind: " + K.kind + "\n# m: " + std::to_string(K.size()) + "\n";
    for (Eigen::Index i = 0; i < K.size(); ++i) {
        for (Eigen::Index j = 0; j < K.size(); ++j) {
            if (j) out += ',';
            out += fmt_double(K.values(i, j));
        }
        out += '\n';
    }
    return out;
}

KernelMatrix gram_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string kind;
    long m = -1;
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("# kind: ", 0) == 0) kind = line.substr(8);
            if (line.rfind("# m: ", 0) == 0) {
                const std::string cell = line.substr(5);
                const auto [ptr, ec] =
                    std::from_chars(cell.data(), cell.data() + cell.size(), m);
                if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
                    throw std::runtime_error("gram csv: bad size header '" + cell + "'");
                }
            }
            continue;
        }
        std::vector<double> row;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const auto comma = line.find(',', pos);
            const std::string cell =
                line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            double value = 0.0;
            const auto [ptr, ec] =
                std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
                throw std::runtime_error("gram csv: bad number '" + cell + "' on line " +
                                         std::to_string(line_no));
            }
            row.push_back(value);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("gram csv: no data rows");
    const std::size_t size = rows.size();
    if (m >= 0 && static_cast<std::size_t>(m) != size) {
        throw std::runtime_error("gram csv: header m does not match row count");
    }
    KernelMatrix K;
    K.kind = kind;
    K.values.resize(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
    for (std::size_t i = 0; i < size; ++i) {
        if (rows[i].size() != size) {
            throw std::runtime_error("gram csv: row " + std::to_string(i) + " has " +
                                     std::to_string(rows[i].size()) + " cells, expected " +
                                     std::to_string(size));
        }
        for (std::size_t j = 0; j < size; ++j) {
            K.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return K;
}

std::string gram_to_json(const KernelMatrix& K) {
    nlohmann::ordered_json j;
    j["kind"] = K.kind;
    j["m"] = K.size();
    auto values = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < K.size(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (Eigen::Index jj = 0; jj < K.size(); ++jj) row.push_back(K.values(i, jj));
        values.push_back(std::move(row));
    }
    j["values"] = std::move(values);
    return j.dump(2) + "\n";
}

KernelMatrix gram_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    KernelMatrix K;
    K.kind = j.at("kind").get<std::string>();
    const auto& values = j.at("values");
    const auto size = static_cast<Eigen::Index>(values.size());
    if (size == 0) throw std::runtime_error("gram json: empty values");
    K.values.resize(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        const auto& row = values.at(i);
        if (static_cast<Eigen::Index>(row.size()) != size) {
            throw std::runtime_error("gram json: ragged values array");
        }
        for (Eigen::Index jj = 0; jj < size; ++jj) K.values(i, jj) = row.at(jj).get<double>();
    }
    return K;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qksvm
