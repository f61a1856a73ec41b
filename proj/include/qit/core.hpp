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

#include <vector>

#include "qit/kernels.hpp"
#include "qit/types.hpp"

namespace qit {

double frobenius(const Matrix& m);
double frobenius_distance(const Matrix& a, const Matrix& b);

// |k><k| without normalization.
Matrix dyad(const Ket& k);

// |k><k| / <k|k>. Throws DomainError on a (near-)zero ket.
Matrix projector_onto(const Ket& k);

bool is_hermitian(const Matrix& op, double tol = kDefaultTol);
bool is_projector(const Matrix& op, double tol = kDefaultTol);
// Hermitian, positive semidefinite and unit trace, all within tol.
bool is_density(const Matrix& op, double tol = kDefaultTol);
bool is_unitary(const Matrix& op, double tol = kDefaultTol);
// M†M = I on the input space (op may be rectangular, rows >= cols).
bool is_isometry(const Matrix& op, double tol = kDefaultTol);
bool is_normalized(const Ket& k, double tol = kDefaultTol);

// Reduced density operator of a pure state: Tr_{discarded}(|psi><psi|).
Matrix reduced_density(const Ket& psi, const SystemShape& shape,
                       const std::vector<int>& keep);

// Purification |Phi> = sum_q sqrt(p_q) |psi_q> (x) |c_q| on shape
// [dim, rank], where rank counts eigenvalues above eig_cutoff. Tracing the
// auxiliary factor recovers rho. Throws DomainError unless rho is a valid
// density operator.
Ket purify(const Matrix& rho, double eig_cutoff = kRankCutoff,
           double tol = kValidationTol);

// Singular values of the bipartite matricization, descending. For a
// normalized ket their squares sum to 1.
std::vector<double> schmidt_coefficients(const Ket& psi, const SystemShape& bipartite);

// Projector onto the span of eigenvectors with eigenvalue > cutoff.
// Requires a Hermitian input.
Matrix support_projector(const Matrix& psd, double cutoff);

}  // namespace qit
