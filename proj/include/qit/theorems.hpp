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

#include <cstdint>
#include <string>
#include <vector>

#include "qit/information.hpp"
#include "qit/types.hpp"

namespace qit {

// Constructive theorem checkers: given a concrete state, measure how far the
// hypotheses and the conclusion are from holding and report both. A report
// whose hypotheses fail is vacuous — neither a pass nor a failure.

struct Violation {
  std::string description;
  double magnitude = 0.0;  // a norm; nonnegative
  bool hypothesis = false; // hypothesis-side vs conclusion-side quantity
};

struct TheoremReport {
  std::string theorem;
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  std::vector<Violation> violations;
  int trials = 0;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTol;

  bool vacuous() const { return !hypotheses_hold; }
  // Largest conclusion-side magnitude (0 if none recorded).
  double worst_conclusion() const;
  double worst_hypothesis() const;
};

// Cloning attempt: an isometry M from H_a into H_b ⊗ H_c and the states it
// is supposed to copy.
struct CloningInstance {
  Matrix isometry;          // (d_b·d_c) x d_a
  std::vector<Ket> alphas;  // normalized kets on H_a
  SystemShape shape_out;    // [d_b, d_c]
};

// Hypotheses: V, W strongly incompatible and both perfectly present in the
// rest. Conclusion: marginal of factor 0 proportional to I/d plus presence
// of `trials` Haar-random bases.
TheoremReport check_presence(const Matrix& rho_ab, const SystemShape& shape,
                             const Decomposition& V, const Decomposition& W,
                             int trials = 64, double tol = kDefaultTol,
                             std::uint64_t seed = 0);

// If V is perfectly present for rho, it is perfectly present for every
// spectral component with weight above the rank cutoff.
TheoremReport check_pure_component_lemma(const Matrix& rho_ab, const SystemShape& shape,
                                         const Decomposition& V, double tol = kDefaultTol);

// If V about factor a is present in b, rho_ac is block-diagonal in V and all
// a–c correlations reduce to truncated observables (plus the rank-1
// block-form corollary when V is a basis). shape = [d_a, d_b, d_c].
TheoremReport check_truncation(const Matrix& rho_abc, const SystemShape& shape,
                               const Decomposition& V, int trials = 32,
                               double tol = kDefaultTol, std::uint64_t seed = 0);

// If V and W are mutually unbiased bases of factor a and V is present in b,
// W is perfectly absent from c.
TheoremReport check_exclusion(const Matrix& rho_abc, const SystemShape& shape,
                              const OrthonormalBasis& V, const OrthonormalBasis& W,
                              double tol = kDefaultTol);

// If all information about a is in b, none is in c (rho_ac factorizes).
TheoremReport check_no_splitting(const Matrix& rho_abc, const SystemShape& shape,
                                 int trials = 64, double tol = kDefaultTol,
                                 std::uint64_t seed = 0);

// Pure states only: all information about a in bc and none in c means all of
// it is in b. Throws DomainError on a non-normalized ket.
TheoremReport check_somewhere(const Ket& psi_abc, const SystemShape& shape,
                              int trials = 64, double tol = kDefaultTol,
                              std::uint64_t seed = 0);

// Pure bipartite state with one basis absent from the rest must factorize.
TheoremReport check_absence_simple(const Ket& psi_ab, const SystemShape& shape,
                                   const OrthonormalBasis& V, double tol = kDefaultTol);

// If the union of the decompositions spans operator space and every one of
// them is absent, rho factorizes. On a spanning failure the report carries
// the achieved operator-space rank.
TheoremReport check_absence_general(const Matrix& rho_ab, const SystemShape& shape,
                                    const std::vector<Decomposition>& decomps,
                                    double tol = kDefaultTol);

// Copying map with product images, matching pairwise overlaps and a
// connected overlap graph acts as (unitary)⊗(fixed ket) on the span of the
// inputs. The recovered unitary is returned through the report's violations
// plus recover_cloning_unitary below.
TheoremReport check_generalized_no_cloning(const CloningInstance& inst,
                                           double tol = kDefaultTol,
                                           double overlap_cutoff = kEdgeTol);

// Phase-alignment detail of the no-cloning checker, exposed for property
// tests: align the c-side kets along a spanning tree of the overlap graph
// (BFS from `root`, depth-first when dfs=true) and solve for U on the span
// of the alphas. Returns U as a d_b x d_a matrix acting on that span.
Matrix recover_cloning_unitary(const CloningInstance& inst, int root = 0,
                               bool dfs = false, double overlap_cutoff = kEdgeTol);

}  // namespace qit
