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

#include "qit/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#include "qit/circuits.hpp"
#include "qit/core.hpp"
#include "qit/fixtures.hpp"
#include "qit/generators.hpp"
#include "qit/kernels.hpp"

namespace qit {

const std::vector<std::string> kTheoremNames = {
    "presence",       "pure-component", "truncation",
    "exclusion",      "no-splitting",   "somewhere",
    "absence-simple", "absence-general", "no-cloning"};

namespace {

constexpr int kInternalTrials = 32;  // Haar-random checks inside one checker run

TheoremReport run_one(const std::string& theorem, int dim, Rng& rng,
                      std::uint64_t trial_seed, double tol) {
  if (theorem == "presence") {
    const auto inst = gen_presence(dim, rng);
    return check_presence(inst.rho, inst.shape, inst.V, inst.W, kInternalTrials, tol,
                          trial_seed);
  }
  if (theorem == "pure-component") {
    const auto inst = gen_pure_component(dim, rng);
    return check_pure_component_lemma(inst.rho, inst.shape, inst.V, tol);
  }
  if (theorem == "truncation") {
    const auto inst = gen_truncation(dim, rng);
    return check_truncation(inst.rho, inst.shape, inst.V, kInternalTrials, tol, trial_seed);
  }
  if (theorem == "exclusion") {
    const auto inst = gen_exclusion(dim, rng);
    return check_exclusion(inst.rho, inst.shape, inst.V, inst.W, tol);
  }
  if (theorem == "no-splitting") {
    const auto inst = gen_no_splitting(dim, rng);
    return check_no_splitting(inst.rho, inst.shape, kInternalTrials, tol, trial_seed);
  }
  if (theorem == "somewhere") {
    const auto inst = gen_somewhere(dim, rng);
    return check_somewhere(inst.psi, inst.shape, kInternalTrials, tol, trial_seed);
  }
  if (theorem == "absence-simple") {
    const auto inst = gen_absence_simple(dim, rng);
    return check_absence_simple(inst.psi, inst.shape, inst.V, tol);
  }
  if (theorem == "absence-general") {
    const auto inst = gen_absence_general(dim, rng);
    return check_absence_general(inst.rho, inst.shape, inst.decomps, tol);
  }
  if (theorem == "no-cloning") {
    const auto inst = gen_cloning(dim, rng);
    return check_generalized_no_cloning(inst, tol);
  }
  throw DomainError("unknown theorem name: " + theorem);
}

TrialOutcome fixture_outcome(std::string label, TheoremReport report,
                             bool expect_vacuous, bool require_conclusion_failure = false) {
  TrialOutcome out;
  out.label = "fixture: " + std::move(label);
  out.expect_vacuous = expect_vacuous;
  if (expect_vacuous)
    out.ok = report.vacuous() && (!require_conclusion_failure || !report.conclusion_holds);
  else
    out.ok = report.hypotheses_hold && report.conclusion_holds;
  out.report = std::move(report);
  return out;
}

std::vector<Decomposition> bases_from_letters(const std::string& letters, int dim) {
  std::vector<Decomposition> out;
  for (char c : letters) {
    switch (c) {
      case 'z':
        out.push_back(basis_z(dim).to_decomposition());
        break;
      case 'x':
        out.push_back(basis_x(dim).to_decomposition());
        break;
      case 'y':
        if (dim != 2) throw DomainError("basis letter 'y' is only defined for dimension 2");
        out.push_back(basis_y().to_decomposition());
        break;
      case ',':
        break;
      default:
        throw DomainError(std::string("unknown basis letter '") + c + "' (use z, x, y)");
    }
  }
  if (out.empty()) throw DomainError("no bases given");
  return out;
}

std::vector<TrialOutcome> theorem_fixtures(const SweepOptions& opts) {
  std::vector<TrialOutcome> out;
  const double tol = opts.tol;
  if (opts.dim != 2) return out;  // the shipped fixtures are qubit examples

  const SystemShape q3{2, 2, 2};
  const Decomposition z = basis_z(2).to_decomposition();
  const Decomposition x = basis_x(2).to_decomposition();

  if (opts.theorem == "presence") {
    out.push_back(fixture_outcome(
        "fully entangled pair, Z and X",
        check_presence(dyad(bell_ket(2)), SystemShape{2, 2}, z, x, kInternalTrials, tol,
                       opts.seed),
        false));
    const Ket ck = channel_ket(one_bit_teleport(2), 0, teleport_fixed_input(1, 2));
    const auto [rho_ab, shape_ab] = focus(dyad(ck), q3, 0, {2});
    out.push_back(fixture_outcome(
        "one-bit teleport channel ket, reference vs output",
        check_presence(rho_ab, shape_ab, z, x, kInternalTrials, tol, opts.seed), false));
  } else if (opts.theorem == "pure-component") {
    Ket k11 = Ket::Zero(4);
    k11(3) = 1.0;
    const Matrix rho = 0.5 * dyad(bell_ket(2)) + 0.5 * dyad(k11);
    out.push_back(fixture_outcome(
        "even mixture of a fully entangled pair and |11>",
        check_pure_component_lemma(rho, SystemShape{2, 2}, z, tol), false));
  } else if (opts.theorem == "truncation") {
    Ket ghz = Ket::Zero(8);
    ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
    out.push_back(fixture_outcome(
        "GHZ state, Z on the first qubit",
        check_truncation(dyad(ghz), q3, z, kInternalTrials, tol, opts.seed), false));
    out.push_back(fixture_outcome(
        "shared-X state, X on the first qubit",
        check_truncation(dyad(fixtures::shared_x_state()), q3, x, kInternalTrials, tol,
                         opts.seed),
        false));
  } else if (opts.theorem == "exclusion") {
    // fully decohered interferometer: which-way info in the environment,
    // coherence info gone from the particle
    const Ket ck = interferometer_channel_ket(1.0);
    const Matrix rho = permute_factors(dyad(ck), q3, {0, 2, 1});  // (ref, env, particle)
    out.push_back(fixture_outcome(
        "decohered interferometer, which-way vs coherence",
        check_exclusion(rho, q3, basis_z(2), basis_x(2), tol), false));
    out.push_back(fixture_outcome(
        "shared-X state, X present in b excludes Z from c",
        check_exclusion(dyad(fixtures::shared_x_state()), q3, basis_x(2), basis_z(2), tol),
        false));
  } else if (opts.theorem == "no-splitting") {
    Ket zero = Ket::Zero(2);
    zero(0) = 1.0;
    out.push_back(fixture_outcome(
        "fully entangled pair times a spectator qubit",
        check_no_splitting(dyad(tensor(bell_ket(2), zero)), q3, kInternalTrials, tol,
                           opts.seed),
        false));
    const Ket ck = channel_ket(one_bit_teleport(2), 0, teleport_fixed_input(1, 2));
    const Matrix rho = permute_factors(dyad(ck), q3, {0, 2, 1});  // (ref, output, leftover)
    out.push_back(fixture_outcome(
        "completed one-bit teleport leaves nothing in the environment",
        check_no_splitting(rho, q3, kInternalTrials, tol, opts.seed), false));
  } else if (opts.theorem == "somewhere") {
    Ket zero = Ket::Zero(2);
    zero(0) = 1.0;
    out.push_back(fixture_outcome(
        "fully entangled pair times a spectator qubit",
        check_somewhere(tensor(bell_ket(2), zero), q3, kInternalTrials, tol, opts.seed),
        false));
    const Ket ck = channel_ket(two_bit_teleport(2), 0, teleport_fixed_input(2, 2));
    const SystemShape q4{2, 2, 2, 2};
    const Ket reordered = permute_factors(ck, q4, {0, 3, 1, 2});  // (ref, out, leftovers)
    out.push_back(fixture_outcome(
        "two-bit teleport channel ket: everything reaches the output",
        check_somewhere(reordered, SystemShape{2, 2, 4}, kInternalTrials, tol, opts.seed),
        false));
    out.push_back(fixture_outcome(
        "shared-X state: X information also sits in c, hypothesis fails",
        check_somewhere(fixtures::shared_x_state(), q3, kInternalTrials, tol, opts.seed),
        true));
  } else if (opts.theorem == "absence-simple") {
    Ket zero = Ket::Zero(2);
    zero(0) = 1.0;
    Ket plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    out.push_back(fixture_outcome(
        "|0>|+> with the Z basis",
        check_absence_simple(tensor(zero, plus), SystemShape{2, 2}, basis_z(2), tol), false));
  } else if (opts.theorem == "no-cloning") {
    out.push_back(fixture_outcome(
        "textbook copier on {|0>, |+>}: rejected at the product-image hypothesis",
        check_generalized_no_cloning(naive_copier_instance(), tol), true));
  }
  return out;
}

}  // namespace

SweepResult run_sweep(const SweepOptions& opts) {
  if (std::find(kTheoremNames.begin(), kTheoremNames.end(), opts.theorem) ==
      kTheoremNames.end())
    throw DomainError("unknown theorem name: " + opts.theorem +
                      " (expected one of presence, pure-component, truncation, exclusion, "
                      "no-splitting, somewhere, absence-simple, absence-general, no-cloning)");
  if (opts.dim < 2) throw DomainError("run_sweep: dimension must be at least 2");
  if (opts.trials < 1) throw DomainError("run_sweep: need at least one trial");

  SweepResult result;
  result.options = opts;

  // Demonstration mode: a restricted basis list turns the sweep into the
  // fixed counterexample analysis instead of random instances.
  if (opts.theorem == "absence-general" && !opts.bases.empty()) {
    if (opts.dim != 2)
      throw DomainError("the --bases demonstration runs at dimension 2");
    const auto decomps = bases_from_letters(opts.bases, 2);
    std::vector<Matrix> projs;
    for (const auto& d : decomps)
      for (const Matrix& p : d.projectors()) projs.push_back(p);
    const bool spanning = spans_operator_space(projs);
    auto report = check_absence_general(fixtures::shared_x_marginal_ab(), SystemShape{2, 2},
                                        decomps, opts.tol);
    result.fixtures.push_back(fixture_outcome(
        "shared-X marginal with bases '" + opts.bases + "'", std::move(report),
        /*expect_vacuous=*/true, /*require_conclusion_failure=*/!spanning));
    for (const auto& f : result.fixtures)
      if (!f.ok) ++result.fail;
    return result;
  }

  result.fixtures = theorem_fixtures(opts);
  for (const auto& f : result.fixtures)
    if (!f.ok) ++result.fail;

  result.randoms.resize(static_cast<size_t>(opts.trials));
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < opts.trials; ++t) {
    try {
      const std::uint64_t trial_seed = Rng::derive(opts.seed, static_cast<std::uint64_t>(t));
      Rng rng(trial_seed);
      TrialOutcome& slot = result.randoms[static_cast<size_t>(t)];
      slot.label = "trial " + std::to_string(t);
      slot.report = run_one(opts.theorem, opts.dim, rng, trial_seed, opts.tol);
      slot.ok = slot.report.hypotheses_hold && slot.report.conclusion_holds;
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  for (const auto& t : result.randoms) {
    if (t.report.vacuous())
      ++result.vacuous;
    else if (t.report.conclusion_holds)
      ++result.pass;
    else
      ++result.fail;
  }
  return result;
}

}  // namespace qit
