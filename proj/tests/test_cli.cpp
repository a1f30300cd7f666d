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
// Drives the installed CLI binary as a subprocess and checks files and
// exit codes.

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qksvm/gram_io.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(QKSVM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 512> buffer;
    while (fgets(buffer.data(), buffer.size(), pipe)) result.output += buffer.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path temp_dir() {
    const auto dir = fs::temp_directory_path() / "qksvm_cli_tests";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen-data writes the dataset and its provenance sidecar") {
    const auto out = temp_dir() / "xor.csv";
    const auto r =
        run_cli("gen-data --kind xor --n 100 --seed 7 --out " + out.string());
    CHECK(r.exit_code == 0);

    const std::string text = qksvm::read_text_file(out);
    CHECK(text.rfind("f1,f2,label\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 201);  // header + 200 rows

    const auto sidecar = nlohmann::json::parse(
        qksvm::read_text_file(temp_dir() / "xor.provenance.json"));
    CHECK(sidecar.at("provenance").at("generator") == "xor");
    CHECK(sidecar.at("provenance").at("seed") == 7);
    CHECK(sidecar.at("rows") == 200);
}

TEST_CASE("gen-data is deterministic across runs") {
    const auto a = temp_dir() / "det_a.csv";
    const auto b = temp_dir() / "det_b.csv";
    CHECK(run_cli("gen-data --kind rings --n 30 --seed 3 --out " + a.string()).exit_code == 0);
    CHECK(run_cli("gen-data --kind rings --n 30 --seed 3 --out " + b.string()).exit_code == 0);
    CHECK(qksvm::read_text_file(a) == qksvm::read_text_file(b));
}

TEST_CASE("unknown generator kind is a usage error with exit code 2") {
    const auto r = run_cli("gen-data --kind spiral --out /tmp/x.csv");
    CHECK(r.exit_code == 2);
}

TEST_CASE("missing subcommand is a usage error") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("kernel emits a unit-diagonal quantum gram and a psd report") {
    const auto out = temp_dir() / "quantum_gram.csv";
    const auto r = run_cli(
        "kernel --gen-kind xor --gen-n 10 --gen-seed 1 --kernel quantum --reps 1 --out " +
        out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("min_eigenvalue=") != std::string::npos);
    CHECK(r.output.find("is_psd=true") != std::string::npos);

    const qksvm::KernelMatrix K = qksvm::gram_from_csv(qksvm::read_text_file(out));
    REQUIRE(K.size() == 20);
    for (Eigen::Index i = 0; i < K.size(); ++i) CHECK(K(i, i) == 1.0);
    CHECK(K.kind.rfind("quantum;", 0) == 0);
}

TEST_CASE("entanglement none vs linear produce different gram files") {
    const auto with = temp_dir() / "gram_ent.csv";
    const auto without = temp_dir() / "gram_none.csv";
    const std::string base =
        "kernel --gen-kind xor --gen-n 10 --gen-seed 4 --kernel quantum --reps 2 ";
    CHECK(run_cli(base + "--entanglement linear --out " + with.string()).exit_code == 0);
    CHECK(run_cli(base + "--entanglement none --out " + without.string()).exit_code == 0);
    const qksvm::KernelMatrix a = qksvm::gram_from_csv(qksvm::read_text_file(with));
    const qksvm::KernelMatrix b = qksvm::gram_from_csv(qksvm::read_text_file(without));
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("train-eval writes replayable report and model files") {
    const auto prefix = (temp_dir() / "blobs").string();
    const std::string flags =
        "train-eval --gen-kind blobs --gen-n 40 --gen-spread 0.4 --gen-seed 5 "
        "--kernel linear --trainer smo --out-prefix ";
    const auto r = run_cli(flags + prefix);
    CHECK(r.exit_code == 0);

    const auto report = nlohmann::json::parse(qksvm::read_text_file(prefix + "_report.json"));
    CHECK(report.at("test").at("accuracy") == 1.0);
    CHECK(report.at("config").at("dataset").at("generator").at("kind") == "blobs");

    const auto model = nlohmann::json::parse(qksvm::read_text_file(prefix + "_model.json"));
    CHECK(model.at("models").size() == 1);
    CHECK(model.at("models").at(0).at("trainer") == "smo");

    // replay from the embedded config: byte-identical report
    const auto prefix2 = (temp_dir() / "blobs_replay").string();
    const auto r2 = run_cli("train-eval --config " + prefix + "_report.json --out-prefix " +
                            prefix2);
    CHECK(r2.exit_code == 0);
    CHECK(qksvm::read_text_file(prefix + "_report.json") ==
          qksvm::read_text_file(prefix2 + "_report.json"));
}

TEST_CASE("train-eval consumes a precomputed gram") {
    const auto gram = temp_dir() / "xchg.csv";
    const std::string data_flags =
        "--gen-kind xor --gen-n 12 --gen-seed 9 --split-seed 9 --kernel quantum --reps 1 ";
    CHECK(run_cli("kernel " + data_flags + "--out " + gram.string()).exit_code == 0);

    const auto direct = (temp_dir() / "direct").string();
    const auto via = (temp_dir() / "via").string();
    CHECK(run_cli("train-eval " + data_flags + "--out-prefix " + direct).exit_code == 0);
    CHECK(run_cli("train-eval " + data_flags + "--gram " + gram.string() +
                  " --out-prefix " + via)
              .exit_code == 0);
    CHECK(qksvm::read_text_file(direct + "_report.json") ==
          qksvm::read_text_file(via + "_report.json"));
}

TEST_CASE("sweep-depth writes ordered rows and deterministic bytes") {
    const auto out_a = temp_dir() / "depth_a.csv";
    const auto out_b = temp_dir() / "depth_b.csv";
    const std::string flags =
        "sweep-depth --gen-kind xor --gen-n 12 --gen-seed 2 --kernel quantum "
        "--trainer smo --reps-list 1,2,3 --out ";
    CHECK(run_cli(flags + out_a.string()).exit_code == 0);
    CHECK(run_cli(flags + out_b.string()).exit_code == 0);
    const std::string text = qksvm::read_text_file(out_a);
    CHECK(text.rfind("reps,train_acc,test_acc\n1,", 0) == 0);
    CHECK(text == qksvm::read_text_file(out_b));
    CHECK(fs::exists(temp_dir() / "depth_a.timing.json"));

    CHECK(run_cli(flags + out_a.string() + " --reps-list 2,2").exit_code == 2);
}

TEST_CASE("sweep-kernels rejects non-sgd trainers and writes a summary") {
    const std::string base =
        "sweep-kernels --gen-kind xor --gen-n 12 --gen-seed 2 --tag r "
        "--kernels linear,rbf --learning-rates 0.1,0.5 --out ";
    const auto out = temp_dir() / "kernels.csv";
    CHECK(run_cli(base + out.string() + " --trainer smo").exit_code == 2);
    CHECK(run_cli(base + out.string() + " --trainer sgd --epochs 10").exit_code == 0);
    const std::string text = qksvm::read_text_file(out);
    CHECK(text.rfind("kernel,learning_rate,train_acc,test_acc\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    const std::string summary =
        qksvm::read_text_file(temp_dir() / "kernels_summary.csv");
    CHECK(summary.find("\nr,linear,0.1,") != std::string::npos);
}

TEST_CASE("plot renders deterministic SVG and rejects malformed input") {
    const auto csv = temp_dir() / "sweep.csv";
    qksvm::write_text_file(csv, "reps,train_acc,test_acc\n1,0.5,0.4\n2,0.9,0.8\n");
    const auto svg_a = temp_dir() / "a.svg";
    const auto svg_b = temp_dir() / "b.svg";
    CHECK(run_cli("plot --in " + csv.string() + " --out " + svg_a.string()).exit_code == 0);
    CHECK(run_cli("plot --in " + csv.string() + " --out " + svg_b.string()).exit_code == 0);
    const std::string svg = qksvm::read_text_file(svg_a);
    CHECK(svg == qksvm::read_text_file(svg_b));
    CHECK(svg.rfind("<svg ", 0) == 0);

    const auto empty = temp_dir() / "empty.csv";
    qksvm::write_text_file(empty, "");
    CHECK(run_cli("plot --in " + empty.string() + " --out /tmp/x.svg").exit_code == 1);

    const auto ragged = temp_dir() / "ragged.csv";
    qksvm::write_text_file(ragged, "a,b\n1,2\n3\n");
    const auto r = run_cli("plot --in " + ragged.string() + " --out /tmp/x.svg");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("line 3") != std::string::npos);
}

TEST_CASE("unwritable output path fails with a nonzero exit") {
    // a regular file in the parent-directory position makes the path unwritable
    const auto blocker = temp_dir() / "blocker";
    qksvm::write_text_file(blocker, "not a directory\n");
    const auto r = run_cli("gen-data --kind xor --n 10 --seed 1 --out " + blocker.string() +
                           "/x.csv");
    CHECK(r.exit_code == 1);
}

}  // TEST_SUITE
