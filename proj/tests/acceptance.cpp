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

// Acceptance suite: one pass/fail line per criterion. Exits nonzero if any
// criterion fails. argv[1] must name the qit CLI binary (used by the
// determinism criterion).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qit/circuits.hpp"
#include "qit/core.hpp"
#include "qit/fixtures.hpp"
#include "qit/generators.hpp"
#include "qit/information.hpp"
#include "qit/sweep.hpp"

using namespace qit;

namespace {

std::string g_cli_path;

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::string&)> body;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string run_cli(const std::string& args, int& exit_code) {
  const std::string cmd = g_cli_path + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return "";
  }
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// 1. both protocols, d in {2,3,5}, 100 random inputs each, fidelity >= 1-1e-10
bool teleportation_exactness(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  double min_fidelity = 1.0;
  Rng rng(20260810);
  for (int bits : {1, 2}) {
    for (int d : {2, 3, 5}) {
      const Circuit c = (bits == 1) ? one_bit_teleport(d) : two_bit_teleport(d);
      for (int t = 0; t < 100; ++t)
        min_fidelity = std::min(min_fidelity, teleport_fidelity(c, random_ket(d, rng)));
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "min fidelity " << min_fidelity << ", " << elapsed << " s";
  detail = os.str();
  return min_fidelity >= 1.0 - 1e-10 && elapsed < 5.0;
}

// 2. one-bit circuit without the final CZ: Z present, X absent at 1e-10
bool correction_removal_split(std::string& detail) {
  const Ket ck = channel_ket(one_bit_teleport(2, false), 0, teleport_fixed_input(1, 2));
  const auto [rho, shape] = focus(dyad(ck), SystemShape{2, 2, 2}, 0, {2});
  const double z_pres = presence_violation(rho, shape, basis_z(2).to_decomposition());
  const double x_abs = absence_violation(rho, shape, basis_x(2).to_decomposition());
  const double x_pres = presence_violation(rho, shape, basis_x(2).to_decomposition());
  std::ostringstream os;
  os << "Z presence violation " << z_pres << ", X absence violation " << x_abs;
  detail = os.str();
  return z_pres <= 1e-10 && x_abs <= 1e-10 && x_pres > 1e-10;
}

// 3. interferometer endpoints and the exclusion verdict pair
bool interferometer_endpoints(std::string& detail) {
  const auto [g0, h0] = exit_probabilities(0.0);
  const auto [g1, h1] = exit_probabilities(1.0);
  const Ket ck = interferometer_channel_ket(1.0);
  const SystemShape q3{2, 2, 2};
  const auto [rho_env, env_shape] = focus(dyad(ck), q3, 0, {2});
  const auto [rho_part, part_shape] = focus(dyad(ck), q3, 0, {1});
  const double ww_present = presence_violation(rho_env, env_shape, basis_z(2).to_decomposition());
  const double coh_absent = absence_violation(rho_part, part_shape, basis_x(2).to_decomposition());
  std::ostringstream os;
  os << "Pr[h]|0 = " << h0 << ", Pr[g]|1 = " << g1 << ", which-way presence violation "
     << ww_present << ", coherence absence violation " << coh_absent;
  detail = os.str();
  return std::abs(h0 - 1.0) <= 1e-12 && std::abs(g0) <= 1e-12 &&
         std::abs(g1 - 0.5) <= 1e-12 && std::abs(h1 - 0.5) <= 1e-12 &&
         ww_present <= 1e-12 && coh_absent <= 1e-12;
}

// 4. the three-qubit counterexample state reproduces its full property list
bool shared_x_properties(std::string& detail) {
  const Ket psi = fixtures::shared_x_state();
  const SystemShape q3{2, 2, 2};
  const Matrix rho = dyad(psi);
  const double tol = 1e-10;

  bool ok = true;
  double worst = 0.0;
  auto track = [&](double v, bool expect_small) {
    worst = std::max(worst, expect_small ? v : 0.0);
    if (expect_small ? v > tol : v <= tol) ok = false;
  };

  const Decomposition x = basis_x(2).to_decomposition();
  const Decomposition y = basis_y().to_decomposition();
  const Decomposition z = basis_z(2).to_decomposition();
  for (int other : {1, 2}) {
    const auto [sub, sub_shape] = focus(rho, q3, 0, {other});
    track(presence_violation(sub, sub_shape, x), true);    // X present
    track(absence_violation(sub, sub_shape, y), true);     // Y absent
    track(absence_violation(sub, sub_shape, z), true);     // Z absent
  }
  // all information in bc: maximal entanglement with equal Schmidt weights
  track(all_information_violation(psi, q3), true);
  const auto sigma = schmidt_coefficients(psi, SystemShape{2, 4});
  track(std::abs(sigma[0] - sigma[1]), true);
  // and the ab marginal is not a product
  const double nonprod = no_information_violation(fixtures::shared_x_marginal_ab(),
                                                  SystemShape{2, 2});
  if (nonprod <= tol) ok = false;

  std::ostringstream os;
  os << "worst property violation " << worst << ", ab-marginal non-product distance "
     << nonprod;
  detail = os.str();
  return ok;
}

// 5. graph connectivity vs commutant dimension, 200 pairs per d in {2..5}
bool graph_commutant_equivalence(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(424242);
  int agreements = 0, total = 0;
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 200; ++trial) {
      const OrthonormalBasis v = haar_basis(d, rng);
      const OrthonormalBasis w = haar_basis(d, rng);
      const bool graph = is_connected(build_graph(v, w));
      const bool algebra =
          commutant_dimension({v.to_decomposition(), w.to_decomposition()}) == 1;
      ++total;
      if (graph == algebra) ++agreements;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << agreements << "/" << total << " agreements, " << elapsed << " s";
  detail = os.str();
  return agreements == total && elapsed < 30.0;
}

// 6. >= 50 seeded hypothesis-satisfying instances per checker at d=2 and d=3
bool theorem_sweeps(std::string& detail) {
  int pass = 0, fail = 0, vacuous = 0;
  for (const std::string& name : kTheoremNames) {
    for (int d : {2, 3}) {
      SweepOptions o;
      o.theorem = name;
      o.dim = d;
      o.trials = 50;
      o.seed = 1000 + d;
      o.tol = 1e-10;
      const SweepResult r = run_sweep(o);
      pass += r.pass;
      fail += r.fail;
      vacuous += r.vacuous;
    }
  }
  std::ostringstream os;
  os << kTheoremNames.size() << " checkers x 2 dims x 50 instances: " << pass << " pass, "
     << vacuous << " vacuous, " << fail << " fail";
  detail = os.str();
  return fail == 0 && vacuous == 0;
}

// 7. two absent bases do not force a product; three do, on 50 random products
bool basis_counting_necessity(std::string& detail) {
  const Matrix rho_ab = fixtures::shared_x_marginal_ab();
  const SystemShape q2{2, 2};
  std::vector<Decomposition> zy{basis_z(2).to_decomposition(), basis_y().to_decomposition()};
  const auto counterexample = check_absence_general(rho_ab, q2, zy, 1e-10);
  const bool two_insufficient = counterexample.vacuous() &&
                                !counterexample.conclusion_holds &&
                                absence_violation(rho_ab, q2, zy[0]) <= 1e-10 &&
                                absence_violation(rho_ab, q2, zy[1]) <= 1e-10;

  std::vector<Decomposition> zxy;
  for (const auto& b : mub_family(2)) zxy.push_back(b.to_decomposition());
  Rng rng(777);
  int holds = 0;
  for (int t = 0; t < 50; ++t) {
    const Matrix rho = tensor(random_density(2, rng), random_density(2, rng));
    const auto r = check_absence_general(rho, q2, zxy, 1e-10);
    if (r.hypotheses_hold && r.conclusion_holds) ++holds;
  }
  std::ostringstream os;
  os << "two-basis counterexample " << (two_insufficient ? "exhibited" : "MISSING")
     << "; three-basis product conclusion " << holds << "/50";
  detail = os.str();
  return two_insufficient && holds == 50;
}

// 8. cloning-form instances recover U at 1e-8; the naive copier is rejected
bool generalized_no_cloning(std::string& detail) {
  Rng rng(31337);
  int recovered = 0;
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const int d = 2 + t % 3;
    const CloningInstance inst = gen_cloning(d, rng);
    const auto r = check_generalized_no_cloning(inst, 1e-8);
    worst = std::max(worst, r.worst_conclusion());
    if (r.hypotheses_hold && r.conclusion_holds) ++recovered;
  }
  const auto copier = check_generalized_no_cloning(naive_copier_instance(), 1e-8);
  const bool copier_rejected = copier.vacuous();
  std::ostringstream os;
  os << recovered << "/20 recovered (worst residual " << worst << "), copier "
     << (copier_rejected ? "rejected" : "NOT rejected");
  detail = os.str();
  return recovered == 20 && copier_rejected;
}

// 9. identical seeds give byte-identical structured reports
bool determinism(std::string& detail) {
  if (g_cli_path.empty()) {
    detail = "no CLI path given";
    return false;
  }
  const std::vector<std::string> cmds = {
      "check presence --dim 2 --trials 10 --seed 123 --format structured",
      "check no-cloning --dim 3 --trials 5 --seed 99 --format structured",
      "teleport --bits 2 --dim 3 --trials 10 --seed 7 --format structured",
  };
  for (const std::string& cmd : cmds) {
    int e1 = 0, e2 = 0;
    const std::string a = run_cli(cmd, e1);
    const std::string b = run_cli(cmd, e2);
    if (e1 != 0 || e2 != 0 || a.empty() || a != b) {
      detail = "mismatch or failure for: " + cmd;
      return false;
    }
  }
  detail = std::to_string(cmds.size()) + " commands byte-identical across reruns";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  std::vector<Criterion> criteria = {
      {1, "teleportation exactness (d=2,3,5; 100 inputs; < 5 s)", teleportation_exactness},
      {2, "correction-removal split (Z kept, X lost)", correction_removal_split},
      {3, "interferometer endpoints and exclusion verdicts", interferometer_endpoints},
      {4, "shared-X three-qubit state property list", shared_x_properties},
      {5, "graph-commutant equivalence (200 pairs, d=2..5, < 30 s)",
       graph_commutant_equivalence},
      {6, "theorem sweeps (50 instances per checker and dim)", theorem_sweeps},
      {7, "d+1-basis necessity for absence", basis_counting_necessity},
      {8, "generalized no-cloning recovery and rejection", generalized_no_cloning},
      {9, "seeded determinism of structured reports", determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title
              << " — " << detail << "\n";
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
