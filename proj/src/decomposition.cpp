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

#include "qit/decomposition.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "qit/core.hpp"

namespace qit {

namespace {

std::vector<std::string> default_labels(const std::string& prefix, int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Decomposition::Decomposition(std::vector<Matrix> projectors, std::vector<std::string> labels,
                             double tol)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
  if (projectors_.empty()) throw DomainError("Decomposition: no projectors given");
  dim_ = static_cast<int>(projectors_[0].rows());
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (size_t j = 0; j < projectors_.size(); ++j) {
    const Matrix& p = projectors_[j];
    if (p.rows() != dim_ || p.cols() != dim_)
      throw DimensionError("Decomposition: projector sizes differ");
    if (!is_hermitian(p, tol))
      throw DomainError("Decomposition: element " + std::to_string(j) + " is not Hermitian");
    if ((p * p - p).norm() > tol)
      throw DomainError("Decomposition: element " + std::to_string(j) + " is not idempotent");
    for (size_t k = 0; k < j; ++k)
      if ((projectors_[k] * p).norm() > tol)
        throw DomainError("Decomposition: elements " + std::to_string(k) + " and " +
                          std::to_string(j) + " are not orthogonal");
    sum += p;
  }
  if ((sum - Matrix::Identity(dim_, dim_)).norm() > tol)
    throw DomainError("Decomposition: projectors do not sum to the identity");
  if (labels_.empty()) labels_ = default_labels("p", outcomes());
  if (labels_.size() != projectors_.size())
    throw DomainError("Decomposition: label count does not match projector count");
}

OrthonormalBasis::OrthonormalBasis(std::vector<Ket> kets, std::vector<std::string> labels,
                                   double tol)
    : kets_(std::move(kets)), labels_(std::move(labels)) {
  if (kets_.empty()) throw DomainError("OrthonormalBasis: no kets given");
  const long d = kets_[0].size();
  if (static_cast<long>(kets_.size()) != d)
    throw DomainError("OrthonormalBasis: a basis of a d-dimensional space needs exactly d kets");
  for (size_t j = 0; j < kets_.size(); ++j) {
    if (kets_[j].size() != d) throw DimensionError("OrthonormalBasis: ket sizes differ");
    for (size_t k = 0; k <= j; ++k) {
      const Complex ip = kets_[k].dot(kets_[j]);  // <k|j>
      const double expected = (k == j) ? 1.0 : 0.0;
      if (std::abs(ip - Complex{expected, 0.0}) > tol)
        throw DomainError("OrthonormalBasis: kets " + std::to_string(k) + " and " +
                          std::to_string(j) + " are not orthonormal");
    }
  }
  if (labels_.empty()) labels_ = default_labels("v", static_cast<int>(d));
  if (labels_.size() != kets_.size())
    throw DomainError("OrthonormalBasis: label count does not match ket count");
}

Decomposition OrthonormalBasis::to_decomposition() const {
  std::vector<Matrix> projs;
  projs.reserve(kets_.size());
  for (const Ket& k : kets_) projs.push_back(dyad(k));
  return Decomposition(std::move(projs), labels_);
}

OrthonormalBasis basis_z(int d) {
  std::vector<Ket> kets;
  for (int j = 0; j < d; ++j) {
    Ket k = Ket::Zero(d);
    k(j) = 1.0;
    kets.push_back(k);
  }
  return OrthonormalBasis(std::move(kets), default_labels("z", d));
}

OrthonormalBasis fourier_basis(int d) {
  const double w = 2.0 * std::numbers::pi / d;
  std::vector<Ket> kets;
  for (int k = 0; k < d; ++k) {
    Ket v(d);
    for (int j = 0; j < d; ++j)
      v(j) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), w * j * k);
    kets.push_back(v);
  }
  return OrthonormalBasis(std::move(kets), default_labels("f", d));
}

OrthonormalBasis basis_x(int d) {
  if (d == 2) {
    Ket plus(2), minus(2);
    const double s = 1.0 / std::sqrt(2.0);
    plus << s, s;
    minus << s, -s;
    return OrthonormalBasis({plus, minus}, {"x+", "x-"});
  }
  return fourier_basis(d);
}

OrthonormalBasis basis_y() {
  Ket p(2), m(2);
  const double s = 1.0 / std::sqrt(2.0);
  p << Complex{s, 0.0}, Complex{0.0, s};
  m << Complex{s, 0.0}, Complex{0.0, -s};
  return OrthonormalBasis({p, m}, {"y+", "y-"});
}

OrthonormalBasis haar_basis(int d, Rng& rng) {
  Matrix u = haar_unitary(d, rng);
  std::vector<Ket> kets;
  for (int j = 0; j < d; ++j) kets.push_back(u.col(j));
  return OrthonormalBasis(std::move(kets));
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<OrthonormalBasis> mub_family(int d) {
  if (!is_prime(d))
    throw DomainError("mub_family: dimension " + std::to_string(d) +
                      " is not prime; only prime dimensions are supported");
  if (d == 2) return {basis_z(2), basis_x(2), basis_y()};

  // odd prime: computational basis plus d quadratic-phase bases
  std::vector<OrthonormalBasis> out;
  out.push_back(basis_z(d));
  const double w = 2.0 * std::numbers::pi / d;
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int r = 0; r < d; ++r) {
    std::vector<Ket> kets;
    for (int k = 0; k < d; ++k) {
      Ket v(d);
      for (int j = 0; j < d; ++j) {
        const int phase = (r * j * j + k * j) % d;
        v(j) = std::polar(amp, w * phase);
      }
      kets.push_back(v);
    }
    out.emplace_back(std::move(kets), default_labels("q" + std::to_string(r) + "_", d));
  }
  return out;
}

std::vector<Matrix> operator_basis(int d) {
  if (d < 1) throw DomainError("operator_basis: dimension must be positive");
  std::vector<Matrix> out;
  out.reserve(static_cast<size_t>(d) * d);
  out.push_back(Matrix::Identity(d, d));

  const double s = std::sqrt(d / 2.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix sym = Matrix::Zero(d, d);
      sym(j, k) = s;
      sym(k, j) = s;
      out.push_back(sym);
      Matrix asym = Matrix::Zero(d, d);
      asym(j, k) = Complex{0.0, -s};
      asym(k, j) = Complex{0.0, s};
      out.push_back(asym);
    }
  }
  for (int l = 1; l < d; ++l) {
    Matrix h = Matrix::Zero(d, d);
    const double f = std::sqrt(static_cast<double>(d) / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) h(j, j) = f;
    h(l, l) = -f * l;
    out.push_back(h);
  }
  return out;
}

int operator_span_rank(const std::vector<Matrix>& ops, double rel_tol) {
  if (ops.empty()) return 0;
  const long d = ops[0].rows();
  Matrix stacked(static_cast<long>(ops.size()), d * d);
  for (size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].rows() != d || ops[i].cols() != d)
      throw DimensionError("operator_span_rank: operator sizes differ");
    for (long r = 0; r < d; ++r)
      for (long c = 0; c < d; ++c) stacked(static_cast<long>(i), r * d + c) = ops[i](r, c);
  }
  Eigen::JacobiSVD<Matrix> svd(stacked);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  int rank = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++rank;
  return rank;
}

bool spans_operator_space(const std::vector<Matrix>& ops, double rel_tol) {
  if (ops.empty()) return false;
  const long d = ops[0].rows();
  return operator_span_rank(ops, rel_tol) == d * d;
}

}  // namespace qit
