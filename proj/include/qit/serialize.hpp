// Copyright 2026 The qit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "qit/circuits.hpp"
#include "qit/decomposition.hpp"
#include "qit/sweep.hpp"
#include "qit/theorems.hpp"
#include "qit/types.hpp"

namespace qit {

// Structured-document (JSON) serialization. Entries are [real, imaginary]
// pairs in row-major order; doubles use shortest round-trip decimal encoding,
// so write/read is bit-exact. Documents carry schema_version = 1.

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json ket_to_json(const Ket& k, const SystemShape* shape = nullptr);
Json operator_to_json(const Matrix& m, const SystemShape* shape = nullptr);
Json decomposition_to_json(const Decomposition& d);
Json circuit_to_json(const Circuit& c);
Json report_to_json(const TheoremReport& r);
Json sweep_to_json(const SweepResult& r);

// A parsed state file: a ket or an operator, with an optional factor shape.
struct StateDocument {
  std::variant<Ket, Matrix> value;
  std::optional<SystemShape> shape;

  bool is_ket() const { return std::holds_alternative<Ket>(value); }
  const Ket& ket() const { return std::get<Ket>(value); }
  const Matrix& op() const { return std::get<Matrix>(value); }
  long dim() const;
};

StateDocument state_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j);
Circuit circuit_from_json(const Json& j);

// File helpers; ParseError messages carry the file name and the parser's
// byte/field diagnostics.
Json load_json(const std::string& path);
StateDocument load_state(const std::string& path);
Decomposition load_decomposition(const std::string& path);
void save_json(const Json& j, const std::string& path);

}  // namespace qit
