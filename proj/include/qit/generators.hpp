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

#include "qit/random.hpp"
#include "qit/theorems.hpp"

namespace qit {

// Random instances that satisfy each checker's hypotheses by construction.
// Used by the sweep harness and the randomized soundness tests.

// Maximally entangled pure state (U_a ⊗ U_b)·Σ|jj>/√d on [d, d].
Ket random_max_entangled(int d, Rng& rng);

struct PresenceInstance {
  Matrix rho;
  SystemShape shape;
  Decomposition V, W;
};
// Alternates pure maximally entangled states and even mixtures of two
// maximally entangled kets with orthogonal supports on a doubled H_b.
PresenceInstance gen_presence(int d, Rng& rng);

struct PureComponentInstance {
  Matrix rho;
  SystemShape shape;
  Decomposition V;
};
// Mixture of correlated pure states whose branch supports occupy orthogonal
// blocks of H_b, so V stays present for the mixture.
PureComponentInstance gen_pure_component(int d, Rng& rng);

struct TruncationInstance {
  Matrix rho;
  SystemShape shape;  // [d, d, d_c]
  Decomposition V;
};
// States Σ_j √p_j |v_j>|b_j>|χ_j> (optionally mixed over χ sets); V is the
// {v_j} basis or a coarse-grained version of it.
TruncationInstance gen_truncation(int d, Rng& rng);

struct ExclusionInstance {
  Matrix rho;
  SystemShape shape;  // [d, d, d]
  OrthonormalBasis V, W;
};
// V, W a unitarily rotated (computational, Fourier) pair — mutually unbiased
// — with V perfectly present in b.
ExclusionInstance gen_exclusion(int d, Rng& rng);

struct NoSplittingInstance {
  Matrix rho;
  SystemShape shape;  // [d, 2d, 2]
};
// Pure maxent(a, b₁) ⊗ entangled(b₂, c) with b = b₁⊗b₂ scrambled by local
// unitaries: all information about a sits in b while c stays correlated
// with b only.
NoSplittingInstance gen_no_splitting(int d, Rng& rng);

struct SomewhereInstance {
  Ket psi;
  SystemShape shape;  // [d, 2d, 2]
};
SomewhereInstance gen_somewhere(int d, Rng& rng);

struct AbsenceSimpleInstance {
  Ket psi;
  SystemShape shape;  // [d, d]
  OrthonormalBasis V;
};
AbsenceSimpleInstance gen_absence_simple(int d, Rng& rng);

struct AbsenceGeneralInstance {
  Matrix rho;
  SystemShape shape;  // [d, d]
  std::vector<Decomposition> decomps;
};
// Random product state with the full MUB family (prime d).
AbsenceGeneralInstance gen_absence_general(int d, Rng& rng);

// Conclusion-form cloning map M = (V·)⊗|γ> with a connected random input
// family spanning H_a.
CloningInstance gen_cloning(int d, Rng& rng);

// The textbook copier M|j> = |jj> together with {|0>, |+>}; violates the
// product-image hypothesis.
CloningInstance naive_copier_instance();

}  // namespace qit
