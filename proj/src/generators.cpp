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

#include "qit/generators.hpp"

#include <cmath>

#include "qit/circuits.hpp"
#include "qit/core.hpp"
#include "qit/kernels.hpp"

namespace qit {

namespace {

// weights bounded away from zero so no branch degenerates
std::vector<double> random_weights(int n, Rng& rng) {
  std::vector<double> w(static_cast<size_t>(n));
  double sum = 0.0;
  for (double& x : w) {
    x = 0.2 + rng.uniform();
    sum += x;
  }
  for (double& x : w) x /= sum;
  return w;
}

Ket basis_ket(int d, int j) {
  Ket k = Ket::Zero(d);
  k(j) = 1.0;
  return k;
}

}  // namespace

Ket random_max_entangled(int d, Rng& rng) {
  const Matrix ua = haar_unitary(d, rng);
  const Matrix ub = haar_unitary(d, rng);
  Ket psi = Ket::Zero(static_cast<long>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) psi += amp * tensor(Ket(ua.col(j)), Ket(ub.col(j)));
  return psi;
}

PresenceInstance gen_presence(int d, Rng& rng) {
  Decomposition v = haar_basis(d, rng).to_decomposition();
  Decomposition w = haar_basis(d, rng).to_decomposition();
  int guard = 0;
  while (!strongly_incompatible(v, w) && ++guard < 64)
    w = haar_basis(d, rng).to_decomposition();

  if (rng.below(2) == 0) {
    Ket psi = random_max_entangled(d, rng);
    return PresenceInstance{dyad(psi), SystemShape{d, d}, v, w};
  }
  // even mixture of two maximally entangled kets with orthogonal b-supports
  Matrix rho = Matrix::Zero(2L * d * d, 2L * d * d);
  for (int block = 0; block < 2; ++block) {
    const Matrix ua = haar_unitary(d, rng);
    const Matrix ub = haar_unitary(d, rng);
    Ket psi = Ket::Zero(2L * d * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) {
      Ket b = Ket::Zero(2 * d);
      b.segment(static_cast<long>(block) * d, d) = ub.col(j);
      psi += amp * tensor(Ket(ua.col(j)), b);
    }
    rho += 0.5 * dyad(psi);
  }
  return PresenceInstance{rho, SystemShape{d, 2 * d}, v, w};
}

PureComponentInstance gen_pure_component(int d, Rng& rng) {
  const int block = 2;      // b-space block size per branch
  const int ncomp = 2;      // mixture components
  const OrthonormalBasis v = haar_basis(d, rng);
  const auto p = random_weights(ncomp, rng);

  Matrix rho = Matrix::Zero(static_cast<long>(d) * d * block,
                            static_cast<long>(d) * d * block);
  for (int q = 0; q < ncomp; ++q) {
    const auto w = random_weights(d, rng);
    Ket psi = Ket::Zero(static_cast<long>(d) * d * block);
    for (int j = 0; j < d; ++j) {
      Ket b = Ket::Zero(static_cast<long>(d) * block);
      b.segment(static_cast<long>(j) * block, block) = random_ket(block, rng);
      psi += std::sqrt(w[static_cast<size_t>(j)]) * tensor(v.ket(j), b);
    }
    rho += p[static_cast<size_t>(q)] * dyad(psi);
  }
  return PureComponentInstance{rho, SystemShape{d, d * block}, v.to_decomposition()};
}

TruncationInstance gen_truncation(int d, Rng& rng) {
  const int dc = 2;
  const OrthonormalBasis v = haar_basis(d, rng);
  const OrthonormalBasis b = haar_basis(d, rng);

  Matrix rho = Matrix::Zero(static_cast<long>(d) * d * dc, static_cast<long>(d) * d * dc);
  const int mixture = 2;
  const auto q = random_weights(mixture, rng);
  for (int t = 0; t < mixture; ++t) {
    const auto p = random_weights(d, rng);
    Ket psi = Ket::Zero(static_cast<long>(d) * d * dc);
    for (int j = 0; j < d; ++j)
      psi += std::sqrt(p[static_cast<size_t>(j)]) *
             tensor(tensor(v.ket(j), b.ket(j)), random_ket(dc, rng));
    rho += q[static_cast<size_t>(t)] * dyad(psi);
  }

  // coarse-grain half the time at d >= 3 to exercise rank-2 projectors
  if (d >= 3 && rng.below(2) == 0) {
    std::vector<Matrix> projs{dyad(v.ket(0)) + dyad(v.ket(1))};
    for (int j = 2; j < d; ++j) projs.push_back(dyad(v.ket(j)));
    return TruncationInstance{rho, SystemShape{d, d, dc}, Decomposition(std::move(projs))};
  }
  return TruncationInstance{rho, SystemShape{d, d, dc}, v.to_decomposition()};
}

ExclusionInstance gen_exclusion(int d, Rng& rng) {
  const Matrix u = haar_unitary(d, rng);
  std::vector<Ket> vkets, wkets;
  const OrthonormalBasis z = basis_z(d);
  const OrthonormalBasis f = fourier_basis(d);
  for (int j = 0; j < d; ++j) {
    vkets.push_back(u * z.ket(j));
    wkets.push_back(u * f.ket(j));
  }
  OrthonormalBasis v(std::move(vkets));
  OrthonormalBasis w(std::move(wkets));

  const OrthonormalBasis b = haar_basis(d, rng);
  const auto p = random_weights(d, rng);
  Ket psi = Ket::Zero(static_cast<long>(d) * d * d);
  for (int j = 0; j < d; ++j)
    psi += std::sqrt(p[static_cast<size_t>(j)]) *
           tensor(tensor(v.ket(j), b.ket(j)), random_ket(d, rng));
  return ExclusionInstance{dyad(psi), SystemShape{d, d, d}, std::move(v), std::move(w)};
}

namespace {

// maxent(a, b1) ⊗ entangled(b2, c) scrambled by local unitaries on b and c;
// flat layout [a, b1, b2, c] coincides with [a, b1*b2, c] row-major.
Ket splitting_free_state(int d, Rng& rng) {
  const Ket ab1 = random_max_entangled(d, rng);
  const Ket b2c = random_ket(4, rng);
  Ket psi = tensor(ab1, b2c);
  const SystemShape shape{d, 2 * d, 2};
  psi = embed(haar_unitary(2 * d, rng), shape, {1}) * psi;
  psi = embed(haar_unitary(2, rng), shape, {2}) * psi;
  return psi;
}

}  // namespace

NoSplittingInstance gen_no_splitting(int d, Rng& rng) {
  const Ket psi = splitting_free_state(d, rng);
  return NoSplittingInstance{dyad(psi), SystemShape{d, 2 * d, 2}};
}

SomewhereInstance gen_somewhere(int d, Rng& rng) {
  return SomewhereInstance{splitting_free_state(d, rng), SystemShape{d, 2 * d, 2}};
}

AbsenceSimpleInstance gen_absence_simple(int d, Rng& rng) {
  Ket psi = tensor(random_ket(d, rng), random_ket(d, rng));
  return AbsenceSimpleInstance{std::move(psi), SystemShape{d, d}, haar_basis(d, rng)};
}

AbsenceGeneralInstance gen_absence_general(int d, Rng& rng) {
  Matrix rho = tensor(random_density(d, rng), random_density(d, rng));
  std::vector<Decomposition> decomps;
  for (const OrthonormalBasis& b : mub_family(d)) decomps.push_back(b.to_decomposition());
  return AbsenceGeneralInstance{std::move(rho), SystemShape{d, d}, std::move(decomps)};
}

CloningInstance gen_cloning(int d, Rng& rng) {
  const int dc = 2;
  const Matrix v = haar_unitary(d, rng);
  const Ket gamma = random_ket(dc, rng);
  Matrix m(static_cast<long>(d) * dc, d);
  for (int a = 0; a < d; ++a) m.col(a) = tensor(Ket(v.col(a)), gamma);

  for (int guard = 0; guard < 100; ++guard) {
    std::vector<Ket> alphas;
    for (int j = 0; j < d + 1; ++j) alphas.push_back(random_ket(d, rng));
    // random kets overlap pairwise almost surely; verify anyway
    bool connected = true;
    for (size_t j = 1; j < alphas.size(); ++j)
      if (std::abs(alphas[0].dot(alphas[j])) <= kEdgeTol) connected = false;
    if (!connected) continue;
    return CloningInstance{m, std::move(alphas), SystemShape{d, dc}};
  }
  throw DomainError("gen_cloning: could not draw a connected input family");
}

CloningInstance naive_copier_instance() {
  Matrix m = Matrix::Zero(4, 2);
  m(0, 0) = 1.0;  // |0> -> |00>
  m(3, 1) = 1.0;  // |1> -> |11>
  Ket plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return CloningInstance{m, {basis_ket(2, 0), plus}, SystemShape{2, 2}};
}

}  // namespace qit
