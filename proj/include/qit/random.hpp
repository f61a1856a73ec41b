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

#include <cstdint>
#include <random>

#include "qit/types.hpp"

namespace qit {

// Seeded generator with hand-rolled distributions. mt19937_64 output is
// fully specified by the standard but std::normal_distribution is not, so
// uniform/normal are derived from the raw 64-bit stream directly and results
// are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform();
  // Standard normal via Box-Muller.
  double normal();
  // Complex with independent N(0,1) real and imaginary parts.
  Complex cnormal();
  // Uniform integer in [0, n).
  int below(int n);

  // Stream derivation for per-trial generators (splitmix64 mixing).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Haar-distributed unitary (Ginibre + QR with phase-fixed R diagonal).
Matrix haar_unitary(int d, Rng& rng);

// Haar-random ket (normalized Ginibre vector).
Ket random_ket(int d, Rng& rng);

// Random density operator GG†/Tr(GG†) with G of size d x rank (rank = d by
// default; a smaller rank gives a rank-deficient state).
Matrix random_density(int d, Rng& rng, int rank = 0);

// Random Hermitian operator, Frobenius norm 1.
Matrix random_hermitian(int d, Rng& rng);

}  // namespace qit
