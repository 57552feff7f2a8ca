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

#include "qlogic/matrix_io.h"

#include <cmath>
#include <fstream>
#include <string>

#include "qlogic/errors.h"

namespace qlogic {

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    nlohmann::ordered_json re = nlohmann::ordered_json::array();
    nlohmann::ordered_json im = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::ordered_json re_row = nlohmann::ordered_json::array();
        nlohmann::ordered_json im_row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < n; ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    nlohmann::ordered_json out;
    out["dim"] = n;
    out["re"] = std::move(re);
    out["im"] = std::move(im);
    return out;
}

namespace {

std::vector<std::vector<double>> read_rows(const nlohmann::json& j, const char* key,
                                           std::size_t dim) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw InvalidArgument(std::string("matrix literal: missing array '") + key + "'");
    }
    const auto& rows = j[key];
    if (rows.size() != dim) {
        throw InvalidArgument(std::string("matrix literal: '") + key + "' has " +
                              std::to_string(rows.size()) + " rows, expected " +
                              std::to_string(dim));
    }
    std::vector<std::vector<double>> out;
    out.reserve(dim);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != dim) {
            throw InvalidArgument(std::string("matrix literal: ragged row in '") + key + "'");
        }
        std::vector<double> values;
        values.reserve(dim);
        for (const auto& v : row) {
            if (!v.is_number()) {
                throw InvalidArgument(std::string("matrix literal: non-numeric entry in '") + key +
                                      "'");
            }
            values.push_back(v.get<double>());
        }
        out.push_back(std::move(values));
    }
    return out;
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
        throw InvalidArgument("matrix literal: expected object with integer 'dim'");
    }
    const auto dim = j["dim"].get<long long>();
    if (dim < 1 || dim > static_cast<long long>(kDefaultMaxDim)) {
        throw InvalidArgument("matrix literal: dim out of range");
    }
    const auto n = static_cast<std::size_t>(dim);
    return ComplexMatrix::from_parts(read_rows(j, "re", n), read_rows(j, "im", n));
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open matrix file " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument("matrix file " + path.string() + ": " + e.what());
    }
    return matrix_from_json(j);
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidArgument("cannot write matrix file " + path.string());
    }
    out << matrix_to_json(m).dump() << '\n';
}

}  // namespace qlogic
