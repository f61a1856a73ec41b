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

#include <string>
#include <vector>

#include "qit/theorems.hpp"

namespace qit {

// Randomized theorem sweeps: generate hypothesis-satisfying instances, run
// the checker, tally pass/vacuous/fail. Trials run in parallel with
// deterministic per-trial seeds derived from the master seed; results are
// merged in trial order, so output is identical for a given (seed, config).

extern const std::vector<std::string> kTheoremNames;

struct SweepOptions {
  std::string theorem;
  int dim = 2;
  int trials = 50;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  // For absence-general: restrict to named bases ("z", "x", "y" letters);
  // empty means the full MUB family.
  std::string bases;
};

struct TrialOutcome {
  std::string label;        // "fixture:..." or "trial k"
  TheoremReport report;
  bool expect_vacuous = false;  // fixtures that demonstrate a rejected hypothesis
  // ok: report matches expectation (pass, or vacuous where expected)
  bool ok = false;
};

struct SweepResult {
  SweepOptions options;
  std::vector<TrialOutcome> fixtures;  // named example instances
  std::vector<TrialOutcome> randoms;   // generated instances
  int pass = 0;
  int fail = 0;
  int vacuous = 0;  // counted over random instances only
  bool success() const { return fail == 0; }
};

// Throws DomainError on an unknown theorem name or unsupported dimension.
SweepResult run_sweep(const SweepOptions& opts);

}  // namespace qit
