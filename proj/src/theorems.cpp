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

#include "qit/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qit/core.hpp"
#include "qit/random.hpp"

namespace qit {

namespace {

TheoremReport make_report(std::string name, double tol, int trials = 0,
                          std::uint64_t seed = 0) {
  TheoremReport r;
  r.theorem = std::move(name);
  r.tolerance = tol;
  r.trials = trials;
  r.seed = seed;
  return r;
}

void add(TheoremReport& r, std::string desc, double magnitude, bool hypothesis) {
  r.violations.push_back(Violation{std::move(desc), magnitude, hypothesis});
}

void finalize(TheoremReport& r) {
  r.hypotheses_hold = true;
  r.conclusion_holds = true;
  for (const Violation& v : r.violations) {
    if (v.magnitude > r.tolerance) {
      if (v.hypothesis)
        r.hypotheses_hold = false;
      else
        r.conclusion_holds = false;
    }
  }
}

// Surrogate for "all information about factor 0 of rho is in the rest":
// maximal entanglement of the purification across the factor-0 cut (i.e. the
// marginal is proportional to I/d) plus perfect presence of `trials`
// Haar-random bases.
void all_present_checks(TheoremReport& r, const Matrix& rho, const SystemShape& shape,
                        int trials, Rng& rng, bool hypothesis, const std::string& role) {
  const int d = shape.dim(0);
  const Matrix normalized = rho / rho.trace().real();
  Ket purified = purify(normalized);
  const SystemShape pure_shape{d, static_cast<int>(purified.size()) / d};
  add(r, role + ": marginal of the purification proportional to I/" + std::to_string(d),
      all_information_violation(purified, pure_shape), hypothesis);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Decomposition basis = haar_basis(d, rng).to_decomposition();
    worst = std::max(worst, presence_violation(normalized, shape, basis));
  }
  add(r, role + ": presence of " + std::to_string(trials) + " Haar-random bases", worst,
      hypothesis);
}

void require_three_factors(const SystemShape& shape, const char* what) {
  if (shape.factors() != 3)
    throw DimensionError(std::string(what) + ": shape must have exactly three factors");
}

}  // namespace

double TheoremReport::worst_conclusion() const {
  double w = 0.0;
  for (const Violation& v : violations)
    if (!v.hypothesis) w = std::max(w, v.magnitude);
  return w;
}

double TheoremReport::worst_hypothesis() const {
  double w = 0.0;
  for (const Violation& v : violations)
    if (v.hypothesis) w = std::max(w, v.magnitude);
  return w;
}

TheoremReport check_presence(const Matrix& rho_ab, const SystemShape& shape,
                             const Decomposition& V, const Decomposition& W,
                             int trials, double tol, std::uint64_t seed) {
  TheoremReport r = make_report("presence", tol, trials, seed);
  shape.require_total(rho_ab.rows(), "check_presence");

  add(r, "hypothesis: strong incompatibility (commutant dimension above 1)",
      static_cast<double>(commutant_dimension({V, W}) - 1), true);
  add(r, "hypothesis: first type perfectly present in the rest",
      presence_violation(rho_ab, shape, V), true);
  add(r, "hypothesis: second type perfectly present in the rest",
      presence_violation(rho_ab, shape, W), true);

  const int d = shape.dim(0);
  const Matrix rho_a = partial_trace(rho_ab, shape, {0});
  add(r, "conclusion: marginal of factor 0 proportional to I/" + std::to_string(d),
      (rho_a - Matrix::Identity(d, d) / static_cast<double>(d)).norm(), false);

  // constructive route for mixed states: every spectral component must be
  // maximally entangled across the factor-0 cut
  {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_ab);
    double worst = 0.0;
    int components = 0;
    for (long q = 0; q < es.eigenvalues().size(); ++q) {
      if (es.eigenvalues()(q) <= kRankCutoff) continue;
      ++components;
      const Matrix comp_a = partial_trace(dyad(Ket(es.eigenvectors().col(q))), shape, {0});
      worst = std::max(worst,
                       (comp_a - Matrix::Identity(d, d) / static_cast<double>(d)).norm());
    }
    add(r, "conclusion: each of " + std::to_string(components) +
           " spectral components maximally entangled", worst, false);
  }

  Rng rng(Rng::derive(seed, 0x9e1));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Decomposition basis = haar_basis(d, rng).to_decomposition();
    worst = std::max(worst, presence_violation(rho_ab, shape, basis));
  }
  add(r, "conclusion: presence of " + std::to_string(trials) + " Haar-random bases", worst,
      false);
  finalize(r);
  return r;
}

TheoremReport check_pure_component_lemma(const Matrix& rho_ab, const SystemShape& shape,
                                         const Decomposition& V, double tol) {
  TheoremReport r = make_report("pure-component", tol);
  shape.require_total(rho_ab.rows(), "check_pure_component_lemma");

  add(r, "hypothesis: information perfectly present for the mixture",
      presence_violation(rho_ab, shape, V), true);

  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_ab);
  double worst = 0.0;
  int components = 0;
  for (long q = 0; q < es.eigenvalues().size(); ++q) {
    if (es.eigenvalues()(q) <= kRankCutoff) continue;
    ++components;
    const Ket psi = es.eigenvectors().col(q);
    worst = std::max(worst, presence_violation(dyad(psi), shape, V));
  }
  r.trials = components;
  add(r, "conclusion: presence for each of " + std::to_string(components) +
         " spectral components", worst, false);
  finalize(r);
  return r;
}

TheoremReport check_truncation(const Matrix& rho_abc, const SystemShape& shape,
                               const Decomposition& V, int trials, double tol,
                               std::uint64_t seed) {
  require_three_factors(shape, "check_truncation");
  TheoremReport r = make_report("truncation", tol, trials, seed);
  shape.require_total(rho_abc.rows(), "check_truncation");

  const auto [rho_ab, shape_ab] = focus(rho_abc, shape, 0, {1});
  add(r, "hypothesis: information about factor a perfectly present in b",
      presence_violation(rho_ab, shape_ab, V), true);

  const auto [rho_ac, shape_ac] = focus(rho_abc, shape, 0, {2});
  const int da = shape.dim(0);

  Matrix truncated = Matrix::Zero(rho_ac.rows(), rho_ac.cols());
  for (const Matrix& p : V.projectors()) {
    const Matrix pj = embed(p, shape_ac, {0});
    truncated += pj * rho_ac * pj;
  }
  add(r, "conclusion: a-c marginal equals its block-diagonal truncation",
      (rho_ac - truncated).norm(), false);

  Rng rng(Rng::derive(seed, 0x9e2));
  const int dc = shape.dim(2);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Matrix a = random_hermitian(da, rng);
    const Matrix c = random_hermitian(dc, rng);
    const Complex full = (tensor(a, c) * rho_ac).trace();
    const Complex trunc = (tensor(truncate(a, V), c) * rho_ac).trace();
    worst = std::max(worst, std::abs(full - trunc));
  }
  add(r, "conclusion: correlations unchanged by truncation over " + std::to_string(trials) +
         " random observable pairs", worst, false);

  bool rank_one = true;
  for (const Matrix& p : V.projectors())
    if (std::abs(p.trace().real() - 1.0) > kValidationTol) rank_one = false;
  if (rank_one) {
    double blocks = 0.0;
    for (int j = 0; j < V.outcomes(); ++j)
      for (int k = 0; k < V.outcomes(); ++k) {
        if (j == k) continue;
        const Matrix pj = embed(V.projector(j), shape_ac, {0});
        const Matrix pk = embed(V.projector(k), shape_ac, {0});
        blocks = std::max(blocks, (pj * rho_ac * pk).norm());
      }
    add(r, "conclusion: off-diagonal basis blocks of the a-c marginal vanish", blocks, false);
  }
  finalize(r);
  return r;
}

TheoremReport check_exclusion(const Matrix& rho_abc, const SystemShape& shape,
                              const OrthonormalBasis& V, const OrthonormalBasis& W,
                              double tol) {
  require_three_factors(shape, "check_exclusion");
  TheoremReport r = make_report("exclusion", tol);
  shape.require_total(rho_abc.rows(), "check_exclusion");

  add(r, "hypothesis: the two bases are mutually unbiased",
      unbiasedness_violation(V, W), true);

  const auto [rho_ab, shape_ab] = focus(rho_abc, shape, 0, {1});
  add(r, "hypothesis: first-basis information about a perfectly present in b",
      presence_violation(rho_ab, shape_ab, V.to_decomposition()), true);

  const auto [rho_ac, shape_ac] = focus(rho_abc, shape, 0, {2});
  add(r, "conclusion: second-basis information about a perfectly absent from c",
      absence_violation(rho_ac, shape_ac, W.to_decomposition()), false);
  finalize(r);
  return r;
}

TheoremReport check_no_splitting(const Matrix& rho_abc, const SystemShape& shape,
                                 int trials, double tol, std::uint64_t seed) {
  require_three_factors(shape, "check_no_splitting");
  TheoremReport r = make_report("no-splitting", tol, trials, seed);
  shape.require_total(rho_abc.rows(), "check_no_splitting");

  const auto [rho_ab, shape_ab] = focus(rho_abc, shape, 0, {1});
  Rng rng(Rng::derive(seed, 0x9e3));
  all_present_checks(r, rho_ab, shape_ab, trials, rng, true,
                     "hypothesis: all information about a in b");

  const auto [rho_ac, shape_ac] = focus(rho_abc, shape, 0, {2});
  add(r, "conclusion: a-c marginal factorizes",
      no_information_violation(rho_ac, shape_ac), false);
  finalize(r);
  return r;
}

TheoremReport check_somewhere(const Ket& psi_abc, const SystemShape& shape,
                              int trials, double tol, std::uint64_t seed) {
  require_three_factors(shape, "check_somewhere");
  shape.require_total(psi_abc.size(), "check_somewhere");
  if (!is_normalized(psi_abc, kValidationTol))
    throw DomainError("check_somewhere: needs a normalized pure state (mixed "
                      "pre-probabilities are outside the theorem's hypotheses)");

  TheoremReport r = make_report("somewhere", tol, trials, seed);
  add(r, "hypothesis: all information about a in the combined bc",
      all_information_violation(psi_abc, shape), true);

  const auto [rho_ac, shape_ac] = focus(psi_abc, shape, 0, {2});
  add(r, "hypothesis: no information about a in c",
      no_information_violation(rho_ac, shape_ac), true);

  const auto [rho_ab, shape_ab] = focus(psi_abc, shape, 0, {1});
  Rng rng(Rng::derive(seed, 0x9e4));
  all_present_checks(r, rho_ab, shape_ab, trials, rng, false,
                     "conclusion: all information about a in b");
  finalize(r);
  return r;
}

TheoremReport check_absence_simple(const Ket& psi_ab, const SystemShape& shape,
                                   const OrthonormalBasis& V, double tol) {
  TheoremReport r = make_report("absence-simple", tol);
  shape.require_total(psi_ab.size(), "check_absence_simple");
  if (!is_normalized(psi_ab, kValidationTol))
    throw DomainError("check_absence_simple: needs a normalized pure state");

  const Matrix rho = dyad(psi_ab);
  add(r, "hypothesis: basis information about factor 0 perfectly absent from the rest",
      absence_violation(rho, shape, V.to_decomposition()), true);

  // expansion coefficients |beta_j> = (<v_j| ⊗ I)|psi>
  const int da = shape.dim(0);
  const long db = psi_ab.size() / da;
  std::vector<Ket> betas;
  for (int j = 0; j < da; ++j) {
    Ket beta = Ket::Zero(db);
    for (int a = 0; a < da; ++a)
      for (long b = 0; b < db; ++b) beta(b) += std::conj(V.ket(j)(a)) * psi_ab(a * db + b);
    betas.push_back(beta);
  }
  double prop = 0.0;
  for (size_t j = 0; j < betas.size(); ++j)
    for (size_t k = j + 1; k < betas.size(); ++k)
      prop = std::max(prop, betas[j].norm() * betas[k].norm() -
                              std::abs(betas[j].dot(betas[k])));
  add(r, "conclusion: expansion coefficients pairwise proportional", prop, false);

  const auto sigma = schmidt_coefficients(
      psi_ab, SystemShape{da, static_cast<int>(db)});
  const double top = sigma.empty() ? 0.0 : sigma.front();
  add(r, "conclusion: state factorizes (residual Schmidt weight)",
      std::abs(1.0 - top * top), false);
  finalize(r);
  return r;
}

TheoremReport check_absence_general(const Matrix& rho_ab, const SystemShape& shape,
                                    const std::vector<Decomposition>& decomps,
                                    double tol) {
  TheoremReport r = make_report("absence-general", tol);
  shape.require_total(rho_ab.rows(), "check_absence_general");
  if (decomps.empty()) throw DomainError("check_absence_general: no decompositions given");

  const int da = shape.dim(0);
  std::vector<Matrix> all_projectors;
  for (const Decomposition& d : decomps) {
    if (d.dim() != da)
      throw DimensionError("check_absence_general: decomposition dimension mismatch");
    for (const Matrix& p : d.projectors()) all_projectors.push_back(p);
  }
  const int rank = operator_span_rank(all_projectors);
  add(r, "hypothesis: projectors span the operator space (rank " + std::to_string(rank) +
         " of " + std::to_string(da * da) + ")",
      static_cast<double>(da * da - rank), true);

  double absent = 0.0;
  for (const Decomposition& d : decomps)
    absent = std::max(absent, absence_violation(rho_ab, shape, d));
  add(r, "hypothesis: every listed type perfectly absent from the rest", absent, true);

  add(r, "conclusion: state factorizes", no_information_violation(rho_ab, shape), false);

  // equivalent route: every coefficient of rho in a trace-orthonormal
  // operator basis of factor 0 is proportional to the marginal
  const Matrix rho_b = partial_trace(rho_ab, shape, [&] {
    std::vector<int> rest;
    for (int f = 1; f < shape.factors(); ++f) rest.push_back(f);
    return rest;
  }());
  double coeff = 0.0;
  for (const Matrix& q : operator_basis(da)) {
    std::vector<int> rest;
    for (int f = 1; f < shape.factors(); ++f) rest.push_back(f);
    const Matrix br = partial_trace(embed(q, shape, {0}) * rho_ab, shape, rest);
    coeff = std::max(coeff, (br - br.trace().real() * rho_b).norm());
  }
  add(r, "conclusion: operator-basis coefficients proportional to the marginal", coeff, false);
  finalize(r);
  return r;
}

namespace {

struct CloningAnalysis {
  std::vector<Ket> betas, gammas;
  std::vector<double> product_deficits;  // 1 - sigma_1^2 per input
  std::vector<std::pair<int, int>> edges;
  int components = 0;
};

CloningAnalysis analyze_cloning(const CloningInstance& inst, double overlap_cutoff) {
  if (inst.shape_out.factors() != 2)
    throw DimensionError("cloning: output shape must have exactly two factors");
  inst.shape_out.require_total(inst.isometry.rows(), "cloning");
  const int db = inst.shape_out.dim(0), dc = inst.shape_out.dim(1);
  const long da = inst.isometry.cols();
  if (inst.alphas.empty()) throw DomainError("cloning: no input states given");

  CloningAnalysis out;
  for (const Ket& alpha : inst.alphas) {
    if (alpha.size() != da) throw DimensionError("cloning: input ket dimension mismatch");
    const Ket image = inst.isometry * alpha;
    Matrix m(db, dc);
    for (int b = 0; b < db; ++b)
      for (int c = 0; c < dc; ++c) m(b, c) = image(static_cast<long>(b) * dc + c);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double s1 = svd.singularValues()(0);
    const double total = svd.singularValues().squaredNorm();
    out.product_deficits.push_back(std::abs(total - s1 * s1));
    out.betas.push_back(svd.matrixU().col(0));
    out.gammas.push_back(svd.matrixV().col(0).conjugate());
  }

  const int n = static_cast<int>(inst.alphas.size());
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      if (std::abs(inst.alphas[static_cast<size_t>(j)].dot(
              inst.alphas[static_cast<size_t>(k)])) > overlap_cutoff)
        out.edges.emplace_back(j, k);

  std::vector<int> comp(static_cast<size_t>(n), -1);
  int ncomp = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<size_t>(start)] >= 0) continue;
    std::queue<int> q;
    q.push(start);
    comp[static_cast<size_t>(start)] = ncomp;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const auto& [a, b] : out.edges) {
        const int other = (a == u) ? b : (b == u ? a : -1);
        if (other >= 0 && comp[static_cast<size_t>(other)] < 0) {
          comp[static_cast<size_t>(other)] = ncomp;
          q.push(other);
        }
      }
    }
    ++ncomp;
  }
  out.components = ncomp;
  return out;
}

// Spanning-tree phase propagation: returns per-input phase factors e^{i phi_j}
// aligning every gamma_j with gamma_root (inside root's component).
std::vector<Complex> align_phases(const CloningAnalysis& an, int n, int root, bool dfs) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& [a, b] : an.edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<Complex> phase(static_cast<size_t>(n), Complex{1.0, 0.0});
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::deque<int> frontier;
  frontier.push_back(root);
  seen[static_cast<size_t>(root)] = true;
  while (!frontier.empty()) {
    int u;
    if (dfs) {
      u = frontier.back();
      frontier.pop_back();
    } else {
      u = frontier.front();
      frontier.pop_front();
    }
    for (int v : adj[static_cast<size_t>(u)]) {
      if (seen[static_cast<size_t>(v)]) continue;
      seen[static_cast<size_t>(v)] = true;
      Complex step = an.gammas[static_cast<size_t>(u)].dot(an.gammas[static_cast<size_t>(v)]);
      const double m = std::abs(step);
      step = (m > 0.0) ? step / m : Complex{1.0, 0.0};
      // <gamma_u|gamma_v> = e^{i(phi_v - phi_u)}
      phase[static_cast<size_t>(v)] = phase[static_cast<size_t>(u)] * step;
      frontier.push_back(v);
    }
  }
  return phase;
}

Matrix solve_unitary(const CloningInstance& inst, const CloningAnalysis& an,
                     const std::vector<Complex>& phase) {
  const long da = inst.isometry.cols();
  const int db = inst.shape_out.dim(0);
  const int n = static_cast<int>(inst.alphas.size());
  Matrix a(da, n), bprime(db, n);
  for (int j = 0; j < n; ++j) {
    a.col(j) = inst.alphas[static_cast<size_t>(j)];
    bprime.col(j) = phase[static_cast<size_t>(j)] * an.betas[static_cast<size_t>(j)];
  }
  // U = B' A^+ vanishes outside the span of the alphas
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  Matrix pinv = Matrix::Zero(n, da);
  for (long i = 0; i < sv.size(); ++i) {
    if (sv(i) <= kSvdRelCutoff * sv(0)) continue;
    pinv += (1.0 / sv(i)) * svd.matrixV().col(i) * svd.matrixU().col(i).adjoint();
  }
  Matrix u = bprime * pinv;

  // gauge: <beta'_1 | U alpha_1> real and positive
  const Complex g = (bprime.col(0).adjoint() * u * a.col(0))(0, 0);
  if (std::abs(g) > 0.0) u *= std::conj(g) / std::abs(g);
  return u;
}

}  // namespace

Matrix recover_cloning_unitary(const CloningInstance& inst, int root, bool dfs,
                               double overlap_cutoff) {
  const CloningAnalysis an = analyze_cloning(inst, overlap_cutoff);
  const int n = static_cast<int>(inst.alphas.size());
  if (root < 0 || root >= n) throw DomainError("recover_cloning_unitary: root out of range");
  const auto phase = align_phases(an, n, root, dfs);
  return solve_unitary(inst, an, phase);
}

TheoremReport check_generalized_no_cloning(const CloningInstance& inst, double tol,
                                           double overlap_cutoff) {
  TheoremReport r = make_report("no-cloning", tol);
  const CloningAnalysis an = analyze_cloning(inst, overlap_cutoff);
  const int n = static_cast<int>(inst.alphas.size());
  const long da = inst.isometry.cols();

  add(r, "hypothesis: the map is an isometry",
      (inst.isometry.adjoint() * inst.isometry - Matrix::Identity(da, da)).norm(), true);

  double norm_dev = 0.0;
  for (const Ket& alpha : inst.alphas)
    norm_dev = std::max(norm_dev, std::abs(alpha.norm() - 1.0));
  add(r, "hypothesis: input states normalized", norm_dev, true);

  add(r, "hypothesis: every image is a product state",
      *std::max_element(an.product_deficits.begin(), an.product_deficits.end()), true);

  double overlap_dev = 0.0;
  for (const auto& [j, k] : an.edges) {
    const double in = std::abs(inst.alphas[static_cast<size_t>(j)].dot(
        inst.alphas[static_cast<size_t>(k)]));
    const double out = std::abs(an.betas[static_cast<size_t>(j)].dot(
        an.betas[static_cast<size_t>(k)]));
    overlap_dev = std::max(overlap_dev, std::abs(in - out));
  }
  add(r, "hypothesis: copy overlaps match input overlaps on every edge", overlap_dev, true);

  add(r, "hypothesis: nonzero-overlap graph connected",
      static_cast<double>(an.components - 1), true);

  double gamma_dev = 0.0;
  for (const auto& [j, k] : an.edges)
    gamma_dev = std::max(gamma_dev,
                         std::abs(1.0 - std::abs(an.gammas[static_cast<size_t>(j)].dot(
                                            an.gammas[static_cast<size_t>(k)]))));
  add(r, "hypothesis: third-factor kets coincide up to phase on every edge", gamma_dev, true);

  const auto phase = align_phases(an, n, 0, /*dfs=*/false);
  const Matrix u = solve_unitary(inst, an, phase);
  const Ket& gamma1 = an.gammas[0];

  double residual = 0.0;
  for (int j = 0; j < n; ++j) {
    const Ket lhs = inst.isometry * inst.alphas[static_cast<size_t>(j)];
    const Ket rhs = tensor(Ket(u * inst.alphas[static_cast<size_t>(j)]), gamma1);
    residual = std::max(residual, (lhs - rhs).norm());
  }

  // and on an orthonormal basis of the span
  Matrix a(da, n);
  for (int j = 0; j < n; ++j) a.col(j) = inst.alphas[static_cast<size_t>(j)];
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  std::vector<long> span_cols;
  for (long i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > kSvdRelCutoff * svd.singularValues()(0))
      span_cols.push_back(i);
  for (long i : span_cols) {
    const Ket g = svd.matrixU().col(i);
    residual = std::max(residual, (inst.isometry * g - tensor(Ket(u * g), gamma1)).norm());
  }
  add(r, "conclusion: map factors as (unitary) ⊗ (fixed third-factor ket) on the span",
      residual, false);

  Matrix span_basis(da, static_cast<long>(span_cols.size()));
  for (size_t i = 0; i < span_cols.size(); ++i)
    span_basis.col(static_cast<long>(i)) = svd.matrixU().col(span_cols[i]);
  const Matrix restricted = u * span_basis;
  add(r, "conclusion: recovered map is an isometry of the span",
      (restricted.adjoint() * restricted -
       Matrix::Identity(restricted.cols(), restricted.cols())).norm(),
      false);
  finalize(r);
  return r;
}

}  // namespace qit
