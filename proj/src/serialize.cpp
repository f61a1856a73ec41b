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

#include "qit/serialize.hpp"

#include <fstream>

namespace qit {

namespace {

Json shape_to_json(const SystemShape& s) {
  Json arr = Json::array();
  for (int d : s.dims()) arr.push_back(d);
  return arr;
}

Json entries_to_json(const Ket& k) {
  Json arr = Json::array();
  for (long i = 0; i < k.size(); ++i) arr.push_back(Json::array({k(i).real(), k(i).imag()}));
  return arr;
}

Json entries_to_json(const Matrix& m) {
  Json arr = Json::array();
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c)
      arr.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
  return arr;
}

Complex entry_from_json(const Json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
    throw ParseError("entries must be [real, imaginary] number pairs");
  return Complex{e[0].get<double>(), e[1].get<double>()};
}

SystemShape shape_from_json(const Json& j) {
  std::vector<int> dims;
  for (const auto& d : j) {
    if (!d.is_number_integer()) throw ParseError("shape must be a list of integers");
    dims.push_back(d.get<int>());
  }
  return SystemShape(dims);
}

}  // namespace

Json ket_to_json(const Ket& k, const SystemShape* shape) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "ket";
  j["dim"] = k.size();
  if (shape) j["shape"] = shape_to_json(*shape);
  j["entries"] = entries_to_json(k);
  return j;
}

Json operator_to_json(const Matrix& m, const SystemShape* shape) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "operator";
  j["dim"] = m.rows();
  if (shape) j["shape"] = shape_to_json(*shape);
  j["entries"] = entries_to_json(m);
  return j;
}

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "decomposition";
  j["dim"] = d.dim();
  j["labels"] = d.labels();
  Json projs = Json::array();
  for (const Matrix& p : d.projectors()) projs.push_back(operator_to_json(p));
  j["projectors"] = std::move(projs);
  return j;
}

Json circuit_to_json(const Circuit& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "circuit";
  j["shape"] = shape_to_json(c.shape());
  Json ops = Json::array();
  for (const GateOp& op : c.ops()) {
    Json o;
    o["gate"] = op.gate;
    o["factors"] = op.factors;
    o["power"] = op.power;
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
  return j;
}

Json report_to_json(const TheoremReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "theorem_report";
  j["theorem"] = r.theorem;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["tolerance"] = r.tolerance;
  j["hypotheses_hold"] = r.hypotheses_hold;
  j["conclusion_holds"] = r.conclusion_holds;
  j["vacuous"] = r.vacuous();
  Json vs = Json::array();
  for (const Violation& v : r.violations) {
    Json e;
    e["description"] = v.description;
    e["magnitude"] = v.magnitude;
    e["hypothesis"] = v.hypothesis;
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  return j;
}

Json sweep_to_json(const SweepResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "sweep_report";
  j["theorem"] = r.options.theorem;
  j["dim"] = r.options.dim;
  j["trials"] = r.options.trials;
  j["seed"] = r.options.seed;
  j["tolerance"] = r.options.tol;
  if (!r.options.bases.empty()) j["bases"] = r.options.bases;
  j["pass"] = r.pass;
  j["fail"] = r.fail;
  j["vacuous"] = r.vacuous;
  j["success"] = r.success();

  auto outcome_to_json = [](const TrialOutcome& t) {
    Json o;
    o["label"] = t.label;
    o["ok"] = t.ok;
    if (t.expect_vacuous) o["expect_vacuous"] = true;
    o["hypotheses_hold"] = t.report.hypotheses_hold;
    o["conclusion_holds"] = t.report.conclusion_holds;
    double worst = 0.0;
    std::string worst_desc;
    for (const Violation& v : t.report.violations)
      if (v.magnitude >= worst) {
        worst = v.magnitude;
        worst_desc = v.description;
      }
    o["worst_violation"] = Json{{"description", worst_desc}, {"magnitude", worst}};
    return o;
  };

  Json fixtures = Json::array();
  for (const TrialOutcome& t : r.fixtures) {
    Json o = outcome_to_json(t);
    o["report"] = report_to_json(t.report);
    fixtures.push_back(std::move(o));
  }
  j["fixtures"] = std::move(fixtures);

  Json randoms = Json::array();
  for (const TrialOutcome& t : r.randoms) randoms.push_back(outcome_to_json(t));
  j["random_trials"] = std::move(randoms);
  return j;
}

long StateDocument::dim() const {
  return is_ket() ? ket().size() : op().rows();
}

StateDocument state_from_json(const Json& j) {
  try {
    if (!j.contains("kind") || !j["kind"].is_string())
      throw ParseError("missing string field 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind != "ket" && kind != "operator")
      throw ParseError("field 'kind' must be 'ket' or 'operator', got '" + kind + "'");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
      throw ParseError("missing integer field 'dim'");
    const long dim = j["dim"].get<long>();
    if (dim < 1) throw ParseError("field 'dim' must be positive");
    if (!j.contains("entries") || !j["entries"].is_array())
      throw ParseError("missing array field 'entries'");
    const Json& entries = j["entries"];

    StateDocument doc;
    if (j.contains("shape")) {
      SystemShape s = shape_from_json(j["shape"]);
      if (s.total() != dim)
        throw ParseError("field 'shape' " + s.to_string() + " does not multiply out to dim " +
                         std::to_string(dim));
      doc.shape = std::move(s);
    }
    if (kind == "ket") {
      if (static_cast<long>(entries.size()) != dim)
        throw ParseError("field 'entries' must hold dim = " + std::to_string(dim) +
                         " pairs, got " + std::to_string(entries.size()));
      Ket k(dim);
      for (long i = 0; i < dim; ++i) k(i) = entry_from_json(entries[static_cast<size_t>(i)]);
      doc.value = std::move(k);
    } else {
      if (static_cast<long>(entries.size()) != dim * dim)
        throw ParseError("field 'entries' must hold dim^2 = " + std::to_string(dim * dim) +
                         " pairs (row-major), got " + std::to_string(entries.size()));
      Matrix m(dim, dim);
      for (long r = 0; r < dim; ++r)
        for (long c = 0; c < dim; ++c)
          m(r, c) = entry_from_json(entries[static_cast<size_t>(r * dim + c)]);
      doc.value = std::move(m);
    }
    return doc;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed state document: ") + e.what());
  }
}

Decomposition decomposition_from_json(const Json& j) {
  try {
    if (!j.contains("kind") || j["kind"] != "decomposition")
      throw ParseError("field 'kind' must be 'decomposition'");
    if (!j.contains("projectors") || !j["projectors"].is_array())
      throw ParseError("missing array field 'projectors'");
    std::vector<Matrix> projs;
    for (const Json& p : j["projectors"]) {
      StateDocument doc = state_from_json(p);
      if (doc.is_ket()) throw ParseError("projectors must be operator documents");
      projs.push_back(doc.op());
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
      for (const Json& l : j["labels"]) labels.push_back(l.get<std::string>());
    return Decomposition(std::move(projs), std::move(labels));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed decomposition document: ") + e.what());
  }
}

Circuit circuit_from_json(const Json& j) {
  try {
    if (!j.contains("kind") || j["kind"] != "circuit")
      throw ParseError("field 'kind' must be 'circuit'");
    Circuit c(shape_from_json(j.at("shape")));
    for (const Json& o : j.at("ops")) {
      std::vector<int> factors;
      for (const Json& f : o.at("factors")) factors.push_back(f.get<int>());
      c.append(o.at("gate").get<std::string>(), std::move(factors),
               o.contains("power") ? o["power"].get<int>() : 1);
    }
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed circuit document: ") + e.what());
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

StateDocument load_state(const std::string& path) {
  try {
    return state_from_json(load_json(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Decomposition load_decomposition(const std::string& path) {
  try {
    return decomposition_from_json(load_json(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace qit
