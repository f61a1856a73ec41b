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

#include "qit/types.hpp"

namespace qit {

// Dense tensor-structure kernels. OpenMP-parallel above a size threshold;
// every result is independent of the thread count (each output element is
// written by exactly one thread, inner sums run serially).
//
// Index convention throughout: row-major over subsystem factors, leftmost
// factor slowest. tensor(a, b) puts `a` on the slow index.

Matrix tensor(const Matrix& a, const Matrix& b);
Ket tensor(const Ket& a, const Ket& b);

// Trace over all factors not in `keep`. `keep` must be strictly increasing;
// the result keeps those factors in the same order.
Matrix partial_trace(const Matrix& op, const SystemShape& shape,
                     const std::vector<int>& keep);

// Operator acting on the listed factors (in the given order, first factor of
// `op` = first listed), identity elsewhere.
Matrix embed(const Matrix& op, const SystemShape& shape,
             const std::vector<int>& factors);

// Reorder tensor factors: new factor i is old factor perm[i].
Ket permute_factors(const Ket& k, const SystemShape& shape,
                    const std::vector<int>& perm);
Matrix permute_factors(const Matrix& op, const SystemShape& shape,
                       const std::vector<int>& perm);

namespace reference {

// Naive single-threaded implementations used as independent oracles by the
// test suite and as the baseline in the benchmark. They walk every element
// of the full index space and decompose indices digit by digit; no shared
// code with the kernels above.

Matrix tensor(const Matrix& a, const Matrix& b);
Ket tensor(const Ket& a, const Ket& b);
Matrix partial_trace(const Matrix& op, const SystemShape& shape,
                     const std::vector<int>& keep);

}  // namespace reference

}  // namespace qit
