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

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qit/circuits.hpp"
#include "qit/core.hpp"
#include "qit/fixtures.hpp"
#include "qit/generators.hpp"
#include "qit/information.hpp"
#include "qit/serialize.hpp"
#include "qit/sweep.hpp"

namespace {

using namespace qit;

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitUsage = 2;

double default_tolerance() {
  if (const char* env = std::getenv("QIT_TOL")) {
    try {
      const double tol = std::stod(env);
      if (tol > 0.0) return tol;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid QIT_TOL value '" << env << "'\n";
  }
  return kDefaultTol;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

struct CommonOptions {
  std::uint64_t seed = 1;
  double tol = default_tolerance();
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--seed", opts->seed, "master random seed");
  cmd->add_option("--tol", opts->tol, "comparison tolerance (or set QIT_TOL)");
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

void emit(const CommonOptions& opts, const Json& doc, const std::string& text) {
  if (opts.format == "structured")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

// ---------------------------------------------------------------- teleport

struct TeleportOptions : CommonOptions {
  int bits = 1;
  int dim = 2;
  int trials = 100;
  bool drop_correction = false;
};

int run_teleport(const TeleportOptions& o) {
  if (o.bits != 1 && o.bits != 2) throw DomainError("--bits must be 1 or 2");
  if (o.dim < 2) throw DomainError("--dim must be at least 2");
  if (o.trials < 1) throw DomainError("--trials must be at least 1");

  const Circuit circuit =
      (o.bits == 1) ? one_bit_teleport(o.dim) : two_bit_teleport(o.dim);
  Rng rng(o.seed);
  double min_fidelity = 1.0;
  for (int t = 0; t < o.trials; ++t)
    min_fidelity = std::min(min_fidelity, teleport_fidelity(circuit, random_ket(o.dim, rng)));
  bool pass = min_fidelity >= 1.0 - o.tol;

  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "teleport_report";
  doc["bits"] = o.bits;
  doc["dim"] = o.dim;
  doc["trials"] = o.trials;
  doc["seed"] = o.seed;
  doc["tolerance"] = o.tol;
  doc["min_fidelity"] = min_fidelity;

  std::ostringstream text;
  text << "protocol: " << o.bits << "-bit teleportation, dim " << o.dim << "\n"
       << "trials: " << o.trials << "  seed: " << o.seed << "  tolerance: " << fmt(o.tol)
       << "\n"
       << "min fidelity: " << fmt(min_fidelity) << "\n";

  if (o.drop_correction) {
    const Circuit broken =
        (o.bits == 1) ? one_bit_teleport(o.dim, false) : two_bit_teleport(o.dim, false);
    const Ket ck = channel_ket(broken, 0, teleport_fixed_input(o.bits, o.dim));
    std::vector<int> dims{o.dim};
    for (int d : broken.shape().dims()) dims.push_back(d);
    const SystemShape full(dims);
    const int out = full.factors() - 1;
    const auto [rho, shape] = focus(dyad(ck), full, 0, {out});

    const double z_presence = presence_violation(rho, shape, basis_z(o.dim).to_decomposition());
    const double x_absence = absence_violation(rho, shape, basis_x(o.dim).to_decomposition());
    const double x_presence = presence_violation(rho, shape, basis_x(o.dim).to_decomposition());
    const bool z_present = z_presence <= o.tol;
    const bool x_absent = x_absence <= o.tol;
    pass = pass && z_present && x_absent;

    Json dc;
    dc["z_present_at_output"] = z_present;
    dc["z_presence_violation"] = z_presence;
    dc["x_absent_from_output"] = x_absent;
    dc["x_absence_violation"] = x_absence;
    dc["x_presence_violation"] = x_presence;
    doc["drop_correction"] = std::move(dc);

    text << "without the final correction gate:\n"
         << "  Z information present at output: " << (z_present ? "yes" : "no")
         << " (violation " << fmt(z_presence) << ")\n"
         << "  X information absent from output: " << (x_absent ? "yes" : "no")
         << " (violation " << fmt(x_absence) << ")\n";
  }

  doc["pass"] = pass;
  text << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  emit(o, doc, text.str());
  return pass ? kExitOk : kExitAssertionFailure;
}

// ------------------------------------------------------------------- check

struct CheckOptions : CommonOptions {
  std::string theorem;
  int dim = 2;
  int trials = 50;
  std::string bases;
};

int run_check(const CheckOptions& o) {
  SweepOptions sw;
  sw.theorem = o.theorem;
  sw.dim = o.dim;
  sw.trials = o.trials;
  sw.seed = o.seed;
  sw.tol = o.tol;
  sw.bases = o.bases;
  const SweepResult result = run_sweep(sw);

  std::ostringstream text;
  text << "theorem: " << o.theorem << "  dim: " << o.dim << "  trials: " << o.trials
       << "  seed: " << o.seed << "  tolerance: " << fmt(o.tol) << "\n";
  for (const TrialOutcome& f : result.fixtures) {
    text << f.label << " — " << (f.ok ? "ok" : "FAILED");
    if (f.expect_vacuous) text << " (hypothesis rejection expected)";
    text << "\n";
    for (const Violation& v : f.report.violations)
      text << "    " << v.description << ": " << fmt(v.magnitude) << "\n";
  }
  if (!result.randoms.empty()) {
    double worst = 0.0;
    std::string worst_label;
    for (const TrialOutcome& t : result.randoms)
      if (t.report.worst_conclusion() >= worst) {
        worst = t.report.worst_conclusion();
        worst_label = t.label;
      }
    text << "random trials: " << result.pass << " pass, " << result.vacuous << " vacuous, "
         << result.fail << " fail\n"
         << "worst conclusion violation: " << fmt(worst) << " (" << worst_label << ")\n";
  }
  text << "result: " << (result.success() ? "PASS" : "FAIL") << "\n";

  emit(o, sweep_to_json(result), text.str());
  return result.success() ? kExitOk : kExitAssertionFailure;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeOptions : CommonOptions {
  std::string state_file;
  std::string shape_arg;
  std::string bases;  // letters, "mub", or "fourier"
  std::vector<std::string> decomp_files;
};

SystemShape parse_shape(const std::string& arg) {
  std::vector<int> dims;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      dims.push_back(std::stoi(tok));
    } catch (...) {
      throw DomainError("--shape expects a comma-separated dimension list, got '" + arg + "'");
    }
  }
  if (dims.empty()) throw DomainError("--shape expects a comma-separated dimension list");
  return SystemShape(dims);
}

struct NamedDecomposition {
  std::string name;
  Decomposition decomposition;
  bool rank_one;  // true when built from an orthonormal basis
  OrthonormalBasis* basis = nullptr;
};

int run_analyze(const AnalyzeOptions& o) {
  const StateDocument doc = load_state(o.state_file);
  SystemShape shape = [&] {
    if (!o.shape_arg.empty()) return parse_shape(o.shape_arg);
    if (doc.shape) return *doc.shape;
    throw DomainError("no factor shape: pass --shape or store one in the state file");
  }();
  shape.require_total(doc.dim(), "analyze");
  if (shape.factors() < 2) throw DomainError("analyze needs at least two factors");

  const Matrix rho =
      doc.is_ket() ? dyad(doc.ket() / doc.ket().norm()) : doc.op();
  const int da = shape.dim(0);

  // assemble the requested decompositions on factor 0
  std::vector<std::string> names;
  std::vector<OrthonormalBasis> bases;
  std::string selection = o.bases;
  if (selection.empty()) selection = (da == 2) ? "zxy" : (is_prime(da) ? "mub" : "zx");
  if (selection == "mub") {
    const auto family = mub_family(da);
    for (size_t i = 0; i < family.size(); ++i) {
      names.push_back("mub" + std::to_string(i));
      bases.push_back(family[i]);
    }
  } else if (selection == "fourier") {
    names.push_back("fourier");
    bases.push_back(fourier_basis(da));
  } else {
    for (char c : selection) {
      switch (c) {
        case 'z':
          names.push_back("z");
          bases.push_back(basis_z(da));
          break;
        case 'x':
          names.push_back("x");
          bases.push_back(basis_x(da));
          break;
        case 'y':
          if (da != 2) throw DomainError("basis letter 'y' is only defined for dimension 2");
          names.push_back("y");
          bases.push_back(basis_y());
          break;
        case ',':
          break;
        default:
          throw DomainError(std::string("unknown basis letter '") + c +
                            "' (use z, x, y, or 'mub'/'fourier')");
      }
    }
  }

  std::vector<Decomposition> decomps;
  std::vector<bool> is_basis;
  for (const auto& b : bases) {
    decomps.push_back(b.to_decomposition());
    is_basis.push_back(true);
  }
  for (const std::string& f : o.decomp_files) {
    Decomposition d = load_decomposition(f);
    if (d.dim() != da)
      throw DomainError("decomposition in " + f + " has dimension " + std::to_string(d.dim()) +
                        ", expected " + std::to_string(da));
    names.push_back(std::filesystem::path(f).stem().string());
    decomps.push_back(std::move(d));
    is_basis.push_back(false);
  }

  // targets: each other factor alone, plus the combined rest if more than one
  std::vector<std::pair<std::string, std::vector<int>>> targets;
  for (int f = 1; f < shape.factors(); ++f)
    targets.push_back({"factor " + std::to_string(f), {f}});
  if (shape.factors() > 2) {
    std::vector<int> rest;
    std::string label = "factors {";
    for (int f = 1; f < shape.factors(); ++f) {
      rest.push_back(f);
      label += (f > 1 ? "," : "") + std::to_string(f);
    }
    label += "}";
    targets.push_back({label, rest});
  }

  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "analysis_report";
  out["state"] = o.state_file;
  out["state_kind"] = doc.is_ket() ? "ket" : "operator";
  out["shape"] = shape.dims();
  out["tolerance"] = o.tol;
  out["about_factor"] = 0;

  std::ostringstream text;
  text << "state: " << o.state_file << " (" << (doc.is_ket() ? "ket" : "operator") << ", dim "
       << doc.dim() << ", shape " << shape.to_string() << ")\n"
       << "information about factor 0 (dim " << da << "), tolerance " << fmt(o.tol) << "\n";

  Json verdicts = Json::array();
  for (size_t i = 0; i < decomps.size(); ++i) {
    text << "  " << names[i] << ":\n";
    for (const auto& [label, within] : targets) {
      const auto [sub, sub_shape] = focus(rho, shape, 0, within);
      const double pres = presence_violation(sub, sub_shape, decomps[i]);
      const double abs_v = absence_violation(sub, sub_shape, decomps[i]);
      const bool present = pres <= o.tol;
      const bool absent = abs_v <= o.tol;
      const std::string verdict =
          present && absent ? "degenerate" : present ? "present" : absent ? "absent" : "neither";
      Json v;
      v["decomposition"] = names[i];
      v["target"] = label;
      v["verdict"] = verdict;
      v["presence_violation"] = pres;
      v["absence_violation"] = abs_v;
      verdicts.push_back(std::move(v));
      text << "    in " << label << ": " << verdict << " (presence violation " << fmt(pres)
           << ", absence violation " << fmt(abs_v) << ")\n";
    }
  }
  out["verdicts"] = std::move(verdicts);

  if (doc.is_ket()) {
    const Ket psi = doc.ket() / doc.ket().norm();
    const double dev = all_information_violation(psi, shape);
    out["all_information_in_rest"] =
        Json{{"holds", dev <= o.tol}, {"violation", dev}};
    text << "  pure state: all information about factor 0 in the rest: "
         << (dev <= o.tol ? "yes" : "no") << " (violation " << fmt(dev) << ")\n";
  }

  Json relations = Json::array();
  for (size_t i = 0; i < decomps.size(); ++i)
    for (size_t j = i + 1; j < decomps.size(); ++j) {
      Json rel;
      rel["a"] = names[i];
      rel["b"] = names[j];
      const bool strong = strongly_incompatible(decomps[i], decomps[j]);
      rel["strongly_incompatible"] = strong;
      std::string mub_text;
      if (is_basis[i] && is_basis[j]) {
        const bool mub = mutually_unbiased(bases[i], bases[j], o.tol);
        rel["mutually_unbiased"] = mub;
        mub_text = mub ? ", mutually unbiased" : ", not mutually unbiased";
      }
      relations.push_back(std::move(rel));
      text << "  " << names[i] << " vs " << names[j] << ": "
           << (strong ? "strongly incompatible" : "not strongly incompatible") << mub_text
           << "\n";
    }
  out["relations"] = std::move(relations);

  emit(o, out, text.str());
  return kExitOk;
}

// ----------------------------------------------------------- interferometer

struct InterferometerOptions : CommonOptions {
  double lambda = 1.0;
};

int run_interferometer(const InterferometerOptions& o) {
  const auto [pg, ph] = exit_probabilities(o.lambda);
  const Ket ck = interferometer_channel_ket(o.lambda);
  const SystemShape q3{2, 2, 2};  // reference, particle, environment

  const auto [rho_env, shape_env] = focus(dyad(ck), q3, 0, {2});
  const double ww_pres = presence_violation(rho_env, shape_env, basis_z(2).to_decomposition());
  const double ww_abs = absence_violation(rho_env, shape_env, basis_z(2).to_decomposition());
  const auto [rho_part, shape_part] = focus(dyad(ck), q3, 0, {1});
  const double coh_pres = presence_violation(rho_part, shape_part, basis_x(2).to_decomposition());
  const double coh_abs = absence_violation(rho_part, shape_part, basis_x(2).to_decomposition());

  auto verdict = [&](double pres, double absn) -> std::string {
    const bool p = pres <= o.tol, a = absn <= o.tol;
    return p && a ? "degenerate" : p ? "present" : a ? "absent" : "neither";
  };
  const std::string ww = verdict(ww_pres, ww_abs);
  const std::string coh = verdict(coh_pres, coh_abs);
  const bool interior = o.lambda > 0.0 && o.lambda < 1.0;

  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "interferometer_report";
  doc["lambda"] = o.lambda;
  doc["tolerance"] = o.tol;
  doc["pr_g"] = pg;
  doc["pr_h"] = ph;
  doc["which_way_in_environment"] = ww;
  doc["coherence_in_particle"] = coh;
  if (interior) doc["note"] = "partial decoherence: outside the strong-decoherence regime";

  std::ostringstream text;
  text << "lambda: " << fmt(o.lambda) << "\n"
       << "Pr[g] = " << fmt(pg) << "\n"
       << "Pr[h] = " << fmt(ph) << "\n"
       << "which-way information in environment: " << ww << "\n"
       << "coherence information in particle: " << coh << "\n";
  if (interior)
    text << "note: partial decoherence — outside the strong-decoherence regime\n";
  emit(o, doc, text.str());
  return kExitOk;
}

// ---------------------------------------------------------------- fixtures

int run_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const Json& j) {
    const std::string path = (fs::path(dir) / name).string();
    save_json(j, path);
    std::cout << "wrote " << path << "\n";
  };

  const SystemShape q2{2, 2}, q3{2, 2, 2}, t2{3, 3};
  put("bell2.json", ket_to_json(bell_ket(2), &q2));
  put("bell3.json", ket_to_json(bell_ket(3), &t2));
  put("shared_x.json", ket_to_json(fixtures::shared_x_state(), &q3));
  put("shared_x_ab.json", operator_to_json(fixtures::shared_x_marginal_ab(), &q2));
  Ket zero = Ket::Zero(2);
  zero(0) = 1.0;
  Ket plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  put("product_zplus.json", ket_to_json(tensor(zero, plus), &q2));
  put("one_bit_teleport_d2.json", circuit_to_json(one_bit_teleport(2)));
  put("two_bit_teleport_d2.json", circuit_to_json(two_bit_teleport(2)));
  put("interferometer_decohered.json",
      ket_to_json(interferometer_channel_ket(1.0), &q3));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"types-of-quantum-information toolkit: teleportation demos, information "
               "presence/absence analysis, and randomized theorem sweeps"};
  app.require_subcommand(1);

  TeleportOptions tele;
  CLI::App* tele_cmd = app.add_subcommand("teleport", "simulate a teleportation protocol");
  tele_cmd->add_option("--bits", tele.bits, "protocol variant: 1 or 2 classical bits");
  tele_cmd->add_option("--dim", tele.dim, "qudit dimension");
  tele_cmd->add_option("--trials", tele.trials, "number of random input states");
  tele_cmd->add_flag("--drop-correction", tele.drop_correction,
                     "also analyze the circuit without its final correction gate");
  add_common(tele_cmd, &tele);

  CheckOptions check;
  CLI::App* check_cmd =
      app.add_subcommand("check", "run a randomized theorem sweep (plus fixed examples)");
  check_cmd->add_option("theorem", check.theorem, "one of: presence, pure-component, "
                        "truncation, exclusion, no-splitting, somewhere, absence-simple, "
                        "absence-general, no-cloning")
      ->required();
  check_cmd->add_option("--dim", check.dim, "subsystem dimension");
  check_cmd->add_option("--trials", check.trials, "number of random instances");
  check_cmd->add_option("--bases", check.bases,
                        "absence-general only: basis letters for the counterexample demo");
  add_common(check_cmd, &check);

  AnalyzeOptions analyze;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "presence/absence analysis of a state file");
  analyze_cmd->add_option("--state", analyze.state_file, "state document (ket or operator)")
      ->required();
  analyze_cmd->add_option("--shape", analyze.shape_arg,
                          "factor dimensions, e.g. 2,2,2 (defaults to the file's shape)");
  analyze_cmd->add_option("--bases", analyze.bases,
                          "basis letters (zxy), 'mub', or 'fourier'");
  analyze_cmd->add_option("--decomp", analyze.decomp_files,
                          "additional decomposition file(s)");
  add_common(analyze_cmd, &analyze);

  InterferometerOptions inter;
  CLI::App* inter_cmd =
      app.add_subcommand("interferometer", "two-path interferometer with decoherence");
  inter_cmd->add_option("--lambda", inter.lambda, "decoherence strength in [0,1]")->required();
  add_common(inter_cmd, &inter);

  std::string fixtures_dir = "data/fixtures";
  CLI::App* fixtures_cmd =
      app.add_subcommand("fixtures", "write the built-in example state/circuit files");
  fixtures_cmd->add_option("--dir", fixtures_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*tele_cmd) return run_teleport(tele);
    if (*check_cmd) return run_check(check);
    if (*analyze_cmd) return run_analyze(analyze);
    if (*inter_cmd) return run_interferometer(inter);
    if (*fixtures_cmd) return run_fixtures(fixtures_dir);
    std::cerr << "error: no subcommand given\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitAssertionFailure;
  }
}
