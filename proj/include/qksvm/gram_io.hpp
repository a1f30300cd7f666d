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
 * Gram-matrix interchange between the `kernel` and `train-eval` subcommands,
 * plus shared number formatting.
 *
 * CSV layout: `# kind: <descriptor>` and `# m: <size>` comment lines, then
 * m row-major data rows. Values use shortest round-trip formatting, so a
 * write/read cycle is exact.
 */

#pragma once

#include <filesystem>
#include <string>

#include "qksvm/kernels.hpp"

namespace qksvm {

/// Shortest decimal form that round-trips to the same double.
std::string fmt_double(double value);

std::string gram_to_csv(const KernelMatrix& K);
KernelMatrix gram_from_csv(const std::string& text);

std::string gram_to_json(const KernelMatrix& K);
KernelMatrix gram_from_json(const std::string& text);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace qksvm
