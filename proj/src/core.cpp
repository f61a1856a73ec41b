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

#include "qit/core.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qit {

double frobenius(const Matrix& m) { return m.norm(); }

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("frobenius_distance: size mismatch");
  return (a - b).norm();
}

Matrix dyad(const Ket& k) { return k * k.adjoint(); }

Matrix projector_onto(const Ket& k) {
  const double n2 = k.squaredNorm();
  if (n2 <= kRankCutoff) throw DomainError("projector_onto: zero ket has no direction");
  return (k * k.adjoint()) / n2;
}

bool is_hermitian(const Matrix& op, double tol) {
  return op.rows() == op.cols() && (op - op.adjoint()).norm() <= tol;
}

bool is_projector(const Matrix& op, double tol) {
  return is_hermitian(op, tol) && (op * op - op).norm() <= tol;
}

bool is_density(const Matrix& op, double tol) {
  if (!is_hermitian(op, tol)) return false;
  if (std::abs(op.trace().real() - 1.0) > tol || std::abs(op.trace().imag()) > tol)
    return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(op, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

bool is_unitary(const Matrix& op, double tol) {
  if (op.rows() != op.cols()) return false;
  return (op.adjoint() * op - Matrix::Identity(op.cols(), op.cols())).norm() <= tol;
}

bool is_isometry(const Matrix& op, double tol) {
  if (op.rows() < op.cols()) return false;
  return (op.adjoint() * op - Matrix::Identity(op.cols(), op.cols())).norm() <= tol;
}

bool is_normalized(const Ket& k, double tol) {
  return std::abs(k.norm() - 1.0) <= tol;
}

Matrix reduced_density(const Ket& psi, const SystemShape& shape,
                       const std::vector<int>& keep) {
  shape.require_total(psi.size(), "reduced_density");
  return partial_trace(dyad(psi), shape, keep);
}

Ket purify(const Matrix& rho, double eig_cutoff, double tol) {
  if (rho.rows() != rho.cols()) throw DimensionError("purify: operator must be square");
  if (!is_hermitian(rho, tol)) throw DomainError("purify: input is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol)
    throw DomainError("purify: input does not have unit trace");

  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  const auto& vals = es.eigenvalues();
  if (vals.minCoeff() < -tol) throw DomainError("purify: input is not positive semidefinite");

  const long d = rho.rows();
  std::vector<long> kept;
  for (long q = 0; q < d; ++q)
    if (vals(q) > eig_cutoff) kept.push_back(q);
  const long rank = static_cast<long>(kept.size());
  if (rank == 0) throw DomainError("purify: input has no spectral weight above the cutoff");

  // |Phi> = sum_q sqrt(p_q) |psi_q> (x) |c_q> on [d, rank]
  Ket phi = Ket::Zero(d * rank);
  for (long i = 0; i < rank; ++i) {
    const long q = kept[static_cast<size_t>(i)];
    const double w = std::sqrt(vals(q));
    for (long r = 0; r < d; ++r) phi(r * rank + i) = w * es.eigenvectors()(r, q);
  }
  return phi;
}

std::vector<double> schmidt_coefficients(const Ket& psi, const SystemShape& bipartite) {
  if (bipartite.factors() != 2)
    throw DimensionError("schmidt_coefficients: shape must have exactly two factors");
  bipartite.require_total(psi.size(), "schmidt_coefficients");
  const long da = bipartite.dim(0), db = bipartite.dim(1);
  Matrix m(da, db);
  for (long a = 0; a < da; ++a)
    for (long b = 0; b < db; ++b) m(a, b) = psi(a * db + b);
  Eigen::JacobiSVD<Matrix> svd(m);
  std::vector<double> out(svd.singularValues().data(),
                          svd.singularValues().data() + svd.singularValues().size());
  return out;
}

Matrix support_projector(const Matrix& psd, double cutoff) {
  if (!is_hermitian(psd, kValidationTol))
    throw DomainError("support_projector: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(psd);
  Matrix out = Matrix::Zero(psd.rows(), psd.cols());
  for (long q = 0; q < psd.rows(); ++q)
    if (es.eigenvalues()(q) > cutoff)
      out += es.eigenvectors().col(q) * es.eigenvectors().col(q).adjoint();
  return out;
}

}  // namespace qit
