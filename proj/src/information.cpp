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

#include "qit/information.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qit/core.hpp"

namespace qit {

namespace {

std::vector<int> rest_factors(const SystemShape& shape) {
  std::vector<int> rest;
  for (int f = 1; f < shape.factors(); ++f) rest.push_back(f);
  return rest;
}

void check_front_decomposition(const Matrix& rho, const SystemShape& shape,
                               const Decomposition& V, const char* what) {
  if (rho.rows() != rho.cols()) throw DimensionError(std::string(what) + ": state must be square");
  shape.require_total(rho.rows(), what);
  if (shape.factors() < 2)
    throw DimensionError(std::string(what) + ": need at least two factors");
  if (V.dim() != shape.dim(0))
    throw DimensionError(std::string(what) + ": decomposition dimension " +
                         std::to_string(V.dim()) + " does not match factor 0 of " +
                         shape.to_string());
}

}  // namespace

std::vector<Matrix> conditional_operators(const Matrix& rho, const SystemShape& shape,
                                          const Decomposition& V) {
  check_front_decomposition(rho, shape, V, "conditional_operators");
  const auto rest = rest_factors(shape);
  std::vector<Matrix> out;
  out.reserve(static_cast<size_t>(V.outcomes()));
  for (int j = 0; j < V.outcomes(); ++j) {
    const Matrix vj = embed(V.projector(j), shape, {0});
    out.push_back(partial_trace(vj * rho, shape, rest));
  }
  return out;
}

double presence_violation(const Matrix& rho, const SystemShape& shape,
                          const Decomposition& V, double weight_cutoff) {
  if (weight_cutoff < 0.0) weight_cutoff = kDefaultTol;
  const auto conds = conditional_operators(rho, shape, V);
  std::vector<int> active;
  for (size_t j = 0; j < conds.size(); ++j)
    if (conds[j].trace().real() > weight_cutoff) active.push_back(static_cast<int>(j));
  double worst = 0.0;
  for (size_t a = 0; a < active.size(); ++a)
    for (size_t b = a + 1; b < active.size(); ++b)
      worst = std::max(worst, (conds[static_cast<size_t>(active[a])] *
                               conds[static_cast<size_t>(active[b])]).norm());
  return worst;
}

bool is_perfectly_present(const Matrix& rho, const SystemShape& shape,
                          const Decomposition& V, double tol, double weight_cutoff) {
  return presence_violation(rho, shape, V, weight_cutoff < 0.0 ? tol : weight_cutoff) <= tol;
}

double absence_violation(const Matrix& rho, const SystemShape& shape,
                         const Decomposition& W) {
  const auto conds = conditional_operators(rho, shape, W);
  const Matrix marginal = partial_trace(rho, shape, rest_factors(shape));
  double worst = 0.0;
  for (const Matrix& c : conds)
    worst = std::max(worst, (c - c.trace().real() * marginal).norm());
  return worst;
}

bool is_perfectly_absent(const Matrix& rho, const SystemShape& shape,
                         const Decomposition& W, double tol) {
  return absence_violation(rho, shape, W) <= tol;
}

Decomposition extract_witness_decomposition(const Matrix& rho, const SystemShape& shape,
                                            const Decomposition& V, double tol) {
  if (!is_perfectly_present(rho, shape, V, tol)) {
    throw DomainError("extract_witness_decomposition: the " + shape.to_string() +
                      " state does not carry this information perfectly; no witness exists");
  }
  const auto conds = conditional_operators(rho, shape, V);
  const long db = conds.front().rows();

  // Orthonormalize the branch supports jointly so the witness is an exact
  // decomposition; branch j owns the vectors contributed by its conditional.
  std::vector<Ket> collected;
  std::vector<int> owner;
  for (int j = 0; j < V.outcomes(); ++j) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(conds[static_cast<size_t>(j)]);
    for (long q = 0; q < db; ++q) {
      if (es.eigenvalues()(q) <= tol) continue;
      Ket v = es.eigenvectors().col(q);
      for (const Ket& u : collected) v -= u.dot(v) * u;
      const double n = v.norm();
      if (n < 0.5) continue;  // already spanned by an earlier branch
      collected.push_back(v / n);
      owner.push_back(j);
    }
  }

  std::vector<Matrix> projs;
  std::vector<std::string> labels;
  Matrix sum = Matrix::Zero(db, db);
  for (int j = 0; j < V.outcomes(); ++j) {
    Matrix t = Matrix::Zero(db, db);
    for (size_t i = 0; i < collected.size(); ++i)
      if (owner[i] == j) t += dyad(collected[i]);
    projs.push_back(t);
    labels.push_back("t_" + V.label(j));
    sum += t;
  }
  Matrix remainder = Matrix::Identity(db, db) - sum;
  if (remainder.norm() > tol) {
    projs.push_back(remainder);
    labels.push_back("t_rest");
  }
  return Decomposition(std::move(projs), std::move(labels));
}

double all_information_violation(const Ket& psi, const SystemShape& shape) {
  shape.require_total(psi.size(), "all_information_present");
  if (!is_normalized(psi, kValidationTol))
    throw DomainError("all_information_present: ket is not normalized");
  const int d = shape.dim(0);
  const Matrix rho0 = reduced_density(psi, shape, {0});
  return (rho0 - Matrix::Identity(d, d) / static_cast<double>(d)).norm();
}

bool all_information_present(const Ket& psi, const SystemShape& shape, double tol) {
  return all_information_violation(psi, shape) <= tol;
}

double no_information_violation(const Matrix& rho, const SystemShape& shape) {
  shape.require_total(rho.rows(), "no_information_present");
  const Matrix rho0 = partial_trace(rho, shape, {0});
  const Matrix rho_rest = partial_trace(rho, shape, rest_factors(shape));
  return (rho - tensor(rho0, rho_rest)).norm();
}

bool no_information_present(const Matrix& rho, const SystemShape& shape, double tol) {
  return no_information_violation(rho, shape) <= tol;
}

namespace {

std::vector<int> focus_order(int about, const std::vector<int>& within) {
  std::vector<int> keep = within;
  keep.push_back(about);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.size() != within.size() + 1)
    throw DimensionError("focus: `about` may not appear in `within`");
  return keep;
}

std::vector<int> front_permutation(const std::vector<int>& keep, int about) {
  // position of `about` in the kept (ascending) list
  std::vector<int> perm;
  const auto it = std::find(keep.begin(), keep.end(), about);
  const int pos = static_cast<int>(it - keep.begin());
  perm.push_back(pos);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    if (i != pos) perm.push_back(i);
  return perm;
}

}  // namespace

std::pair<Matrix, SystemShape> focus(const Matrix& rho, const SystemShape& shape,
                                     int about, const std::vector<int>& within) {
  shape.require_total(rho.rows(), "focus");
  const auto keep = focus_order(about, within);
  Matrix reduced = partial_trace(rho, shape, keep);
  SystemShape kept_shape = shape.subset(keep);
  const auto perm = front_permutation(keep, about);
  return {permute_factors(reduced, kept_shape, perm), kept_shape.subset(perm)};
}

std::pair<Matrix, SystemShape> focus(const Ket& psi, const SystemShape& shape,
                                     int about, const std::vector<int>& within) {
  return focus(dyad(psi), shape, about, within);
}

IncompatibilityGraph build_graph(const OrthonormalBasis& V, const OrthonormalBasis& W,
                                 double edge_tol) {
  if (V.dim() != W.dim()) throw DimensionError("build_graph: basis dimensions differ");
  IncompatibilityGraph g;
  g.dim = V.dim();
  for (int j = 0; j < V.dim(); ++j)
    for (int k = 0; k < W.dim(); ++k)
      if (std::abs(V.ket(j).dot(W.ket(k))) > edge_tol) g.edges.emplace_back(j, k);
  return g;
}

bool is_connected(const IncompatibilityGraph& g) {
  const int n = 2 * g.dim;
  if (n == 0) return true;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& [j, k] : g.edges) {
    adj[static_cast<size_t>(j)].push_back(g.dim + k);
    adj[static_cast<size_t>(g.dim + k)].push_back(j);
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int visited = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[static_cast<size_t>(u)]) {
      if (!seen[static_cast<size_t>(v)]) {
        seen[static_cast<size_t>(v)] = true;
        ++visited;
        q.push(v);
      }
    }
  }
  return visited == n;
}

int commutant_dimension(const std::vector<Decomposition>& decomps, double rel_tol) {
  if (decomps.empty()) throw DomainError("commutant_dimension: no decompositions given");
  const int d = decomps[0].dim();
  int rows = 0;
  for (const auto& dec : decomps) {
    if (dec.dim() != d) throw DimensionError("commutant_dimension: dimensions differ");
    rows += dec.outcomes();
  }

  // vec_row(PX - XP) = (P ⊗ I - I ⊗ Pᵀ) vec_row(X)
  const long d2 = static_cast<long>(d) * d;
  Matrix constraints(static_cast<long>(rows) * d2, d2);
  long block = 0;
  const Matrix id = Matrix::Identity(d, d);
  for (const auto& dec : decomps) {
    for (const Matrix& p : dec.projectors()) {
      constraints.block(block * d2, 0, d2, d2) = tensor(p, id) - tensor(id, p.transpose());
      ++block;
    }
  }
  Eigen::JacobiSVD<Matrix> svd(constraints);
  const auto& sv = svd.singularValues();
  int rank = 0;
  if (sv.size() > 0 && sv(0) > 0.0)
    for (long i = 0; i < sv.size(); ++i)
      if (sv(i) > rel_tol * sv(0)) ++rank;
  return static_cast<int>(d2 - rank);
}

bool strongly_incompatible(const Decomposition& V, const Decomposition& W, double rel_tol) {
  return commutant_dimension({V, W}, rel_tol) == 1;
}

double unbiasedness_violation(const OrthonormalBasis& V, const OrthonormalBasis& W) {
  if (V.dim() != W.dim()) throw DimensionError("mutually_unbiased: dimensions differ");
  const double target = 1.0 / V.dim();
  double worst = 0.0;
  for (int j = 0; j < V.dim(); ++j)
    for (int k = 0; k < W.dim(); ++k) {
      const double p = std::norm(V.ket(j).dot(W.ket(k)));
      worst = std::max(worst, std::abs(p - target));
    }
  return worst;
}

bool mutually_unbiased(const OrthonormalBasis& V, const OrthonormalBasis& W, double tol) {
  return unbiasedness_violation(V, W) <= tol;
}

Matrix truncate(const Matrix& a, const Decomposition& V) {
  if (a.rows() != a.cols() || a.rows() != V.dim())
    throw DimensionError("truncate: operator and decomposition dimensions differ");
  Matrix out = Matrix::Zero(V.dim(), V.dim());
  for (const Matrix& p : V.projectors()) out += p * a * p;
  return out;
}

}  // namespace qit
