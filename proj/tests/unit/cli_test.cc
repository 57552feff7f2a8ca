// Copyright 2026 The qlogic Authors
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

#include "cli.h"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "qlogic/matrix_io.h"
#include "qlogic/random.h"

using namespace qlogic;
using namespace qlogic::cli;

namespace {

namespace fs = std::filesystem;

int parse_error_code(const std::vector<std::string>& args) {
    try {
        parse_args(args);
    } catch (const UsageError& e) {
        return e.exit_code;
    }
    return -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("qlogic_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST(parse_complex, literals) {
    EXPECT_EQ(parse_complex("0.6"), Complex(0.6, 0.0));
    EXPECT_EQ(parse_complex("0.8i"), Complex(0.0, 0.8));
    EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
    EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
    EXPECT_EQ(parse_complex("0.6+0.8i"), Complex(0.6, 0.8));
    EXPECT_EQ(parse_complex("-0.6-0.8i"), Complex(-0.6, -0.8));
    EXPECT_EQ(parse_complex("1e-1+2e-1i"), Complex(0.1, 0.2));
    EXPECT_EQ(parse_complex("0.5 - i"), Complex(0.5, -1.0));
    EXPECT_THROW(parse_complex(""), std::invalid_argument);
    EXPECT_THROW(parse_complex("abc"), std::invalid_argument);
    EXPECT_THROW(parse_complex("1+2"), std::invalid_argument);
}

TEST(parse_args, grover) {
    const RunConfig c = parse_args({"grover", "--n", "4", "--r", "1"});
    EXPECT_EQ(c.command, Command::Grover);
    EXPECT_EQ(c.n_list, std::vector<std::size_t>{4});
    ASSERT_TRUE(c.r.has_value());
    EXPECT_EQ(*c.r, 1u);
    EXPECT_FALSE(parse_args({"grover", "--r", "auto"}).r.has_value());
    EXPECT_EQ(parse_args({"grover", "--n", "2,8,16"}).n_list,
              (std::vector<std::size_t>{2, 8, 16}));
}

TEST(parse_args, teleport) {
    const RunConfig c =
        parse_args({"teleport", "--alpha", "0.6", "--beta", "0.8i", "--seed", "7"});
    EXPECT_EQ(c.command, Command::Teleport);
    EXPECT_EQ(c.seed, 7u);
    ASSERT_TRUE(c.beta.has_value());
    EXPECT_EQ(*c.beta, Complex(0.0, 0.8));
    EXPECT_EQ(*c.alpha, Complex(0.6, 0.0));
}

TEST(parse_args, shared_flags_before_or_after_command) {
    EXPECT_EQ(parse_args({"--seed", "3", "annex"}).seed, 3u);
    EXPECT_EQ(parse_args({"annex", "--seed", "3"}).seed, 3u);
    const RunConfig c = parse_args({"grover", "--tol", "1e-12"});
    EXPECT_EQ(c.abs_tol, 1e-12);
    EXPECT_EQ(to_json(c)["abs_tol"].get<double>(), 1e-12);
}

TEST(parse_args, usage_errors) {
    EXPECT_EQ(parse_error_code({}), kExitUsage);
    EXPECT_EQ(parse_error_code({"bogus"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"grover", "--frobnicate"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"grover", "--n", "1"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"grover", "--n", "x"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"grover", "--r", "-3"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"grover", "--n", "4", "--target", "5"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"grover", "--tol", "-1"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"teleport", "--alpha", "1"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"teleport", "--alpha", "1", "--beta", "1"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"teleport", "--alpha", "1", "--beta", "zz"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"teleport", "--force-outcome", "5"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"annex", "--p-grid", "0,0.5"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"verify-assumptions", "--matrix-file", "a.json"}), kExitUsage);
    EXPECT_EQ(parse_error_code({"--help"}), 0);
}

TEST(config, json_round_trip) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"all", "--seed", "9"},
             {"grover", "--n", "4,8", "--multiplicity", "1,3", "--r", "auto", "--target", "2"},
             {"teleport", "--alpha", "0.6", "--beta", "-0.8i", "--trials", "4",
              "--force-outcome", "2", "--out", "/tmp/x.json"},
             {"annex", "--p-grid", "0.1,0.2", "--r-max", "5", "--tol", "1e-11"},
             {"verify-assumptions", "--dims", "2,3", "--trials", "5", "--json"}}) {
        const RunConfig c = parse_args(args);
        const auto j = to_json(c);
        const RunConfig back = config_from_json(nlohmann::json::parse(j.dump()));
        EXPECT_EQ(to_json(back).dump(), j.dump());
    }
}

TEST(run, grover_report_contains_certain_success) {
    const fs::path dir = scratch_dir("grover");
    RunConfig c = parse_args({"grover", "--n", "4", "--r", "1"});
    c.out = dir / "grover.jsonl";
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(run(c, out, err), kExitOk) << err.str();
    std::istringstream lines(slurp(dir / "grover.jsonl"));
    std::string line;
    bool found = false;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        if (j["n"] == 4 && j["r"] == 1) {
            EXPECT_NEAR(j["success_prob"].get<double>(), 1.0, 1e-9);
            found = true;
        }
    }
    EXPECT_TRUE(found);
    EXPECT_FALSE(fs::exists(dir / "grover.jsonl.tmp"));
}

TEST(run, teleport_trials_all_succeed) {
    const fs::path dir = scratch_dir("teleport");
    RunConfig c = parse_args({"teleport", "--trials", "100"});
    c.out = dir / "teleport.json";
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(run(c, out, err), kExitOk) << err.str();
    const auto doc = nlohmann::json::parse(slurp(dir / "teleport.json"));
    ASSERT_EQ(doc["transcripts"].size(), 100u);
    for (const auto& t : doc["transcripts"]) {
        EXPECT_NEAR(t["final_prob"].get<double>(), 1.0, 1e-9);
    }
}

TEST(run, broken_tolerance_fails) {
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(run(parse_args({"grover", "--n", "4", "--tol", "1e-30"}), out, err),
              kExitCheckFailed);
}

TEST(run, json_summary) {
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(run(parse_args({"annex", "--p-grid", "0.3", "--r-max", "3", "--json"}), out, err),
              kExitOk);
    const auto j = nlohmann::json::parse(out.str());
    EXPECT_EQ(j["command"], "annex");
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["failures"], 0);
    EXPECT_GT(j["checks"].get<int>(), 0);
}

TEST(run, matrix_file_pair) {
    const fs::path dir = scratch_dir("matrix");
    Rng rng(1);
    write_matrix_file(dir / "e.json", random_projection(3, 1, rng).matrix());
    write_matrix_file(dir / "f.json", random_projection(3, 2, rng).matrix());
    RunConfig c = parse_args({"verify-assumptions", "--dims", "2", "--trials", "3",
                              "--matrix-file", (dir / "e.json").string(), "--matrix-file",
                              (dir / "f.json").string()});
    c.out = dir / "report.json";
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(run(c, out, err), kExitOk) << err.str();
    const auto doc = nlohmann::json::parse(slurp(dir / "report.json"));
    bool found = false;
    for (const auto& r : doc) {
        if (r["name"] == "matrix_pair/assumption1") found = true;
    }
    EXPECT_TRUE(found);

    write_matrix_file(dir / "bad.json", 0.5 * ComplexMatrix::identity(3));
    c.matrix_files[1] = dir / "bad.json";
    EXPECT_EQ(run(c, out, err), kExitCheckFailed);
}

TEST(run, deterministic_reports) {
    const fs::path a = scratch_dir("det_a");
    const fs::path b = scratch_dir("det_b");
    for (const fs::path& dir : {a, b}) {
        RunConfig c = parse_args({"teleport", "--trials", "5", "--seed", "4"});
        c.out = dir / "t.json";
        std::ostringstream out;
        std::ostringstream err;
        ASSERT_EQ(run(c, out, err), kExitOk);
    }
    EXPECT_EQ(slurp(a / "t.json"), slurp(b / "t.json"));
}
