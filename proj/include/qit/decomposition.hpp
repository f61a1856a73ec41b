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

#include "qit/random.hpp"
#include "qit/types.hpp"

namespace qit {

// A type (species) of information: mutually orthogonal projectors summing to
// the identity. Validated on construction; throws DomainError on projectors
// that fail Hermiticity/idempotency/orthogonality/completeness at `tol`.
class Decomposition {
 public:
  Decomposition(std::vector<Matrix> projectors, std::vector<std::string> labels = {},
                double tol = kValidationTol);

  int dim() const { return dim_; }
  int outcomes() const { return static_cast<int>(projectors_.size()); }
  const Matrix& projector(int j) const { return projectors_[j]; }
  const std::vector<Matrix>& projectors() const { return projectors_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int j) const { return labels_[j]; }

 private:
  int dim_ = 0;
  std::vector<Matrix> projectors_;
  std::vector<std::string> labels_;
};

// Complete orthonormal basis: exactly dim unit kets with <v_j|v_k> = δ_jk
// within tol.
class OrthonormalBasis {
 public:
  explicit OrthonormalBasis(std::vector<Ket> kets, std::vector<std::string> labels = {},
                            double tol = kValidationTol);

  int dim() const { return static_cast<int>(kets_.size()); }
  const Ket& ket(int j) const { return kets_[j]; }
  const std::vector<Ket>& kets() const { return kets_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Rank-1 projector decomposition |v_j><v_j|.
  Decomposition to_decomposition() const;

 private:
  std::vector<Ket> kets_;
  std::vector<std::string> labels_;
};

// Standard bases. basis_z is the computational basis, basis_x its Fourier
// conjugate (|+>,|-> for d=2), basis_y the qubit {(|0>±i|1>)/√2}.
OrthonormalBasis basis_z(int d);
OrthonormalBasis basis_x(int d);
OrthonormalBasis basis_y();
OrthonormalBasis fourier_basis(int d);
OrthonormalBasis haar_basis(int d, Rng& rng);

// d+1 pairwise mutually unbiased bases for prime d: {Z, X, Y} for d=2, the
// computational plus quadratic-phase families for odd primes. Throws
// DomainError for non-prime d.
std::vector<OrthonormalBasis> mub_family(int d);

// Trace-orthonormal Hermitian operator basis {Q_r}, r = 0..d²-1, with
// Q_0 = I and (1/d)Tr(Q_r†Q_s) = δ_rs (scaled Gell-Mann construction).
std::vector<Matrix> operator_basis(int d);

// Rank of the span of the given operators inside the d²-dimensional operator
// space (singular values below rel_tol times the largest count as zero).
int operator_span_rank(const std::vector<Matrix>& ops, double rel_tol = kSvdRelCutoff);
bool spans_operator_space(const std::vector<Matrix>& ops, double rel_tol = kSvdRelCutoff);

bool is_prime(int n);

}  // namespace qit
