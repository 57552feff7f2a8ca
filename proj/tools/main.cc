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

#include <iostream>

#include "cli.h"

int main(int argc, char** argv) {
    try {
        const auto config = qlogic::cli::parse_args(argc, argv);
        return qlogic::cli::run(config, std::cout, std::cerr);
    } catch (const qlogic::cli::UsageError& e) {
        (e.exit_code == 0 ? std::cout : std::cerr) << e.message << "\n";
        return e.exit_code;
    }
}
