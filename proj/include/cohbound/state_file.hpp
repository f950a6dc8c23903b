// Copyright 2026 The cohbound Authors
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

// JSON state files:
//
//   {"schema_version": 1, "dim_a": 2, "dim_b": 2,
//    "matrix": [[re, im], [re, im], ...]}      // row-major, (dim_a*dim_b)^2 pairs

#ifndef COHBOUND_STATE_FILE_HPP
#define COHBOUND_STATE_FILE_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cohbound/qmatrix.hpp"

namespace cohbound {

inline constexpr int kStateSchemaVersion = 1;

class StateFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline nlohmann::json state_to_json(const BipartiteState& s) {
  nlohmann::json matrix = nlohmann::json::array();
  for (const auto& z : s.mat().entries()) matrix.push_back({z.real(), z.imag()});
  return {{"schema_version", kStateSchemaVersion},
          {"dim_a", s.dim_a()},
          {"dim_b", s.dim_b()},
          {"matrix", std::move(matrix)}};
}

namespace detail {
inline std::size_t positive_dimension(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw StateFileError(std::string("state file: missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw StateFileError(std::string("state file: '") + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}
}  // namespace detail

inline BipartiteState state_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw StateFileError("state file: top level must be an object");
  if (!j.contains("schema_version") || !j.at("schema_version").is_number_integer()) {
    throw StateFileError("state file: missing integer 'schema_version'");
  }
  if (j.at("schema_version").get<int>() != kStateSchemaVersion) {
    throw StateFileError("state file: unsupported schema_version " +
                         std::to_string(j.at("schema_version").get<int>()) + " (expected " +
                         std::to_string(kStateSchemaVersion) + ")");
  }
  const std::size_t dim_a = detail::positive_dimension(j, "dim_a");
  const std::size_t dim_b = detail::positive_dimension(j, "dim_b");
  if (!j.contains("matrix") || !j.at("matrix").is_array()) {
    throw StateFileError("state file: 'matrix' must be an array of [real, imag] pairs");
  }
  const auto& raw = j.at("matrix");
  const std::size_t n = dim_a * dim_b;
  if (raw.size() != n * n) {
    throw StateFileError("state file: matrix has " + std::to_string(raw.size()) +
                         " entries, expected (dim_a*dim_b)^2 = " + std::to_string(n * n));
  }
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const auto& pair = raw[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw StateFileError("state file: matrix entry " + std::to_string(k) +
                           " must be a [real, imag] pair of numbers");
    }
    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  try {
    return BipartiteState(DensityMatrix(ComplexMatrix(n, std::move(entries))), dim_a, dim_b);
  } catch (const std::invalid_argument& e) {
    throw StateFileError(std::string("state file: matrix is not a valid density matrix: ") +
                         e.what());
  }
}

inline std::string serialize_state(const BipartiteState& s) { return state_to_json(s).dump(2); }

inline BipartiteState parse_state(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StateFileError(std::string("state file: not valid JSON: ") + e.what());
  }
  return state_from_json(j);
}

inline void write_state_file(const std::string& path, const BipartiteState& s) {
  std::ofstream out(path);
  if (!out) throw StateFileError("cannot open '" + path + "' for writing");
  out << serialize_state(s) << '\n';
}

inline BipartiteState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateFileError("cannot open '" + path + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_state(text);
}

}  // namespace cohbound

#endif  // COHBOUND_STATE_FILE_HPP
