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

#ifndef QLOGIC_TOOLS_CLI_H
#define QLOGIC_TOOLS_CLI_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlogic/matrix.h"

namespace qlogic::cli {

enum class Command { VerifyAssumptions, Grover, Teleport, Annex, All };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::All;
    std::uint64_t seed = 0;
    double abs_tol = 1e-10;
    double eig_tol = 1e-8;
    std::optional<std::filesystem::path> out;
    bool json = false;

    // verify-assumptions
    std::vector<std::size_t> dims{2, 3, 4, 8};
    std::optional<std::size_t> trials;  // per-command default when unset
    std::vector<std::filesystem::path> matrix_files;

    // grover
    std::vector<std::size_t> n_list{2, 4, 8, 16, 64};
    std::vector<std::size_t> multiplicities{1, 2};
    std::optional<std::size_t> r;  // nullopt means "auto"
    std::size_t target = 1;

    // teleport
    std::optional<Complex> alpha;
    std::optional<Complex> beta;
    std::optional<int> force_outcome;

    // annex
    std::vector<double> p_grid;  // empty means 0.05..0.95 step 0.05
    std::size_t r_max = 30;

    std::size_t assumption_trials() const { return trials.value_or(1000); }
    std::size_t teleport_trials() const { return trials.value_or(100); }
};

/// Thrown by parse_args; carries the message and the exit code to use
/// (0 for --help, 2 for usage errors).
struct UsageError {
    int exit_code;
    std::string message;
};

RunConfig parse_args(const std::vector<std::string>& args);
RunConfig parse_args(int argc, const char* const* argv);

std::string command_name(Command c);
nlohmann::ordered_json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

/// Parses "a+bi", "bi", "a", "-i" and similar literals. Throws
/// std::invalid_argument on malformed input.
Complex parse_complex(const std::string& text);

/// Executes the configured command, writes reports, and returns the exit
/// status: 0 if every check passed, 1 otherwise.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qlogic::cli

#endif  // QLOGIC_TOOLS_CLI_H
