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

#include "qit/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace qit {

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] keeps the log finite
  const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Complex Rng::cnormal() {
  const double re = normal();
  const double im = normal();
  return Complex{re, im};
}

int Rng::below(int n) {
  if (n <= 0) throw DomainError("Rng::below: n must be positive");
  return static_cast<int>(uniform() * n) % n;
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over seed + stream step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix haar_unitary(int d, Rng& rng) {
  if (d < 1) throw DomainError("haar_unitary: dimension must be positive");
  Matrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = rng.cnormal();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the gauge so the distribution is Haar
  for (int c = 0; c < d; ++c) {
    const Complex rc = r(c, c);
    const double a = std::abs(rc);
    q.col(c) *= (a > 0.0) ? rc / a : Complex{1.0, 0.0};
  }
  return q;
}

Ket random_ket(int d, Rng& rng) {
  if (d < 1) throw DomainError("random_ket: dimension must be positive");
  Ket k(d);
  for (int i = 0; i < d; ++i) k(i) = rng.cnormal();
  const double n = k.norm();
  if (n == 0.0) return random_ket(d, rng);
  return k / n;
}

Matrix random_density(int d, Rng& rng, int rank) {
  if (d < 1) throw DomainError("random_density: dimension must be positive");
  if (rank <= 0 || rank > d) rank = d;
  Matrix g(d, rank);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < rank; ++c) g(r, c) = rng.cnormal();
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Matrix random_hermitian(int d, Rng& rng) {
  Matrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = rng.cnormal();
  Matrix h = (g + g.adjoint()) / 2.0;
  return h / h.norm();
}

}  // namespace qit
