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

#include <utility>
#include <vector>

#include "qit/decomposition.hpp"
#include "qit/types.hpp"

namespace qit {

// Presence/absence predicates for types of information. The decomposition
// always lives on factor 0 of the supplied shape; the conditional operators
// live on the remaining factors jointly. Use focus() to move an arbitrary
// factor to the front and restrict the "within" factors first.

// Unnormalized conditional operators rho_j = Tr_0((V_j ⊗ I_rest) rho).
// Their traces sum to Tr(rho).
std::vector<Matrix> conditional_operators(const Matrix& rho, const SystemShape& shape,
                                          const Decomposition& V);

// The V information about factor 0 is perfectly present in the rest iff the
// conditional operators are pairwise orthogonal: ||rho_j rho_k||_F <= tol for
// j != k. Branches with weight Tr(rho_j) <= weight_cutoff carry no
// probability and are excluded from the pairwise test (negative cutoff means
// "use tol").
bool is_perfectly_present(const Matrix& rho, const SystemShape& shape,
                          const Decomposition& V, double tol = kDefaultTol,
                          double weight_cutoff = -1.0);
// Largest pairwise product norm among active branches (0 when fewer than two).
double presence_violation(const Matrix& rho, const SystemShape& shape,
                          const Decomposition& V, double weight_cutoff = -1.0);

// The W information is perfectly absent iff every conditional operator is
// proportional to the marginal: ||rho_k - Tr(rho_k) rho_rest||_F <= tol.
bool is_perfectly_absent(const Matrix& rho, const SystemShape& shape,
                         const Decomposition& W, double tol = kDefaultTol);
double absence_violation(const Matrix& rho, const SystemShape& shape,
                         const Decomposition& W);

// Measurement-correlation witness: one projector T_j on the rest per branch
// (the support of rho_j), plus a remainder completing the identity (dropped
// when zero). Requires presence; throws DomainError otherwise.
Decomposition extract_witness_decomposition(const Matrix& rho, const SystemShape& shape,
                                            const Decomposition& V,
                                            double tol = kDefaultTol);

// All types of information about factor 0 are in the rest iff the pure state
// is maximally entangled across that cut: ||Tr_rest |psi><psi| - I/d0|| <= tol.
bool all_information_present(const Ket& psi, const SystemShape& shape,
                             double tol = kDefaultTol);
double all_information_violation(const Ket& psi, const SystemShape& shape);

// No information about factor 0 is in the rest iff rho factorizes.
bool no_information_present(const Matrix& rho, const SystemShape& shape,
                            double tol = kDefaultTol);
double no_information_violation(const Matrix& rho, const SystemShape& shape);

// Reduce rho to the factors {about} ∪ within and reorder so `about` becomes
// factor 0 (within keep ascending order after it). Returns the reduced
// operator and its shape.
std::pair<Matrix, SystemShape> focus(const Matrix& rho, const SystemShape& shape,
                                     int about, const std::vector<int>& within);
std::pair<Matrix, SystemShape> focus(const Ket& psi, const SystemShape& shape,
                                     int about, const std::vector<int>& within);

// Bipartite graph on the 2d kets of two orthonormal bases with an edge
// wherever |<v_j|w_k>| exceeds edge_tol.
struct IncompatibilityGraph {
  int dim = 0;
  // (j, k) meaning v_j — w_k. Node ids: v_j = j, w_k = dim + k.
  std::vector<std::pair<int, int>> edges;
};

IncompatibilityGraph build_graph(const OrthonormalBasis& V, const OrthonormalBasis& W,
                                 double edge_tol = kEdgeTol);
bool is_connected(const IncompatibilityGraph& g);

// Dimension of {X : [X, P] = 0 for every projector P of every decomposition},
// computed as the null-space dimension of the stacked commutator map.
int commutant_dimension(const std::vector<Decomposition>& decomps,
                        double rel_tol = kSvdRelCutoff);

// Only 0 and I commute with every projector of both decompositions. For
// orthonormal bases this is equivalent to connectivity of build_graph.
bool strongly_incompatible(const Decomposition& V, const Decomposition& W,
                           double rel_tol = kSvdRelCutoff);

bool mutually_unbiased(const OrthonormalBasis& V, const OrthonormalBasis& W,
                       double tol = kDefaultTol);
double unbiasedness_violation(const OrthonormalBasis& V, const OrthonormalBasis& W);

// Block-diagonal projection sum_j V_j A V_j. Idempotent and trace-preserving.
Matrix truncate(const Matrix& a, const Decomposition& V);

}  // namespace qit
