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

#ifndef QLOGIC_MATRIX_IO_H
#define QLOGIC_MATRIX_IO_H

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "qlogic/matrix.h"

namespace qlogic {

// Matrix literal format: {"dim": n, "re": [[...]], "im": [[...]]}, row-major.

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);
/// Throws InvalidArgument on malformed input (missing keys, ragged rows,
/// dim disagreeing with the arrays, non-finite values).
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

}  // namespace qlogic

#endif  // QLOGIC_MATRIX_IO_H
