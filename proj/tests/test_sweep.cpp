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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qit/serialize.hpp"
#include "qit/sweep.hpp"
#include "test_support.hpp"

using namespace qit;

namespace {

SweepOptions opts(const std::string& theorem, int dim, int trials, std::uint64_t seed) {
  SweepOptions o;
  o.theorem = theorem;
  o.dim = dim;
  o.trials = trials;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("every theorem sweep passes with zero vacuous instances at d=2 and d=3") {
  for (const std::string& name : kTheoremNames) {
    for (int d : {2, 3}) {
      const SweepResult r = run_sweep(opts(name, d, 6, 99));
      CAPTURE(name);
      CAPTURE(d);
      CHECK(r.fail == 0);
      CHECK(r.vacuous == 0);
      CHECK(r.pass == 6);
      for (const TrialOutcome& f : r.fixtures) CHECK(f.ok);
    }
  }
}

TEST_CASE("sweeps reject unknown theorem names and bad configs") {
  CHECK_THROWS_AS(run_sweep(opts("bogus", 2, 5, 1)), DomainError);
  CHECK_THROWS_AS(run_sweep(opts("presence", 1, 5, 1)), DomainError);
  CHECK_THROWS_AS(run_sweep(opts("presence", 2, 0, 1)), DomainError);
}

TEST_CASE("sweep output is deterministic for a fixed seed") {
  const SweepResult a = run_sweep(opts("truncation", 2, 8, 1234));
  const SweepResult b = run_sweep(opts("truncation", 2, 8, 1234));
  CHECK(sweep_to_json(a).dump() == sweep_to_json(b).dump());

  const SweepResult c = run_sweep(opts("truncation", 2, 8, 4321));
  CHECK(sweep_to_json(a).dump() != sweep_to_json(c).dump());
}

TEST_CASE("the no-cloning sweep carries the expected copier rejection fixture") {
  const SweepResult r = run_sweep(opts("no-cloning", 2, 3, 5));
  REQUIRE_FALSE(r.fixtures.empty());
  CHECK(r.fixtures[0].expect_vacuous);
  CHECK(r.fixtures[0].ok);
  CHECK(r.fixtures[0].report.vacuous());
  CHECK(r.fail == 0);
}

TEST_CASE("restricted-bases demonstration shows the insufficiency counterexample") {
  SweepOptions o = opts("absence-general", 2, 5, 1);
  o.bases = "zy";
  const SweepResult r = run_sweep(o);
  REQUIRE(r.fixtures.size() == 1);
  CHECK(r.fixtures[0].ok);
  CHECK(r.fixtures[0].report.vacuous());
  CHECK_FALSE(r.fixtures[0].report.conclusion_holds);  // the non-product witness
  CHECK(r.randoms.empty());
  CHECK(r.success());
  CHECK_THROWS_AS(run_sweep([&] {
                    SweepOptions bad = o;
                    bad.bases = "q";
                    return bad;
                  }()),
                  DomainError);
}

TEST_CASE("the exclusion sweep at d=2 includes the interferometer fixture") {
  const SweepResult r = run_sweep(opts("exclusion", 2, 3, 5));
  bool found = false;
  for (const TrialOutcome& f : r.fixtures)
    if (f.label.find("interferometer") != std::string::npos) {
      found = true;
      CHECK(f.ok);
    }
  CHECK(found);
}
