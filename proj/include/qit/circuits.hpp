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
#include <utility>
#include <vector>

#include "qit/decomposition.hpp"
#include "qit/types.hpp"

namespace qit {

namespace gates {

Matrix identity(int d);
// Cyclic shift X_d |j> = |j+1 mod d>; the Pauli X for d=2.
Matrix shift(int d);
// Clock Z_d |j> = ω^j |j>, ω = e^{2πi/d}; the Pauli Z for d=2.
Matrix clock(int d);
// Fourier F_d |j> = (1/√d) Σ_k ω^{jk} |k>; the Hadamard for d=2.
Matrix fourier(int d);
Matrix hadamard();
// Two-qudit controlled shift: |j,k> -> |j, k + power·j mod d>.
Matrix controlled_shift(int d, int power = 1);
// Two-qudit controlled phase: |j,k> -> ω^{power·j·k} |j,k>.
Matrix controlled_clock(int d, int power = 1);

// Lookup by serialized name ("X", "Z", "H", "F", "CX", "CZ").
Matrix by_name(const std::string& name, int d, int power);
// Number of factors the named gate acts on (1 or 2).
int arity(const std::string& name);

}  // namespace gates

struct GateOp {
  std::string gate;          // name understood by gates::by_name
  std::vector<int> factors;  // targets, first = control for CX/CZ
  int power = 1;
};

// Ordered list of gate applications on a tensor-product space. Factor
// dimensions come from the shape; gates must be square on the product of
// their target dimensions.
class Circuit {
 public:
  explicit Circuit(SystemShape shape) : shape_(std::move(shape)) {}

  const SystemShape& shape() const { return shape_; }
  const std::vector<GateOp>& ops() const { return ops_; }

  Circuit& append(std::string gate, std::vector<int> factors, int power = 1);
  // Same circuit with the last gate removed.
  Circuit without_final_gate() const;

  // Sequential application; throws DimensionError on mismatched input.
  Ket apply(const Ket& input) const;

 private:
  SystemShape shape_;
  std::vector<GateOp> ops_;
};

// Full composite unitary of the circuit.
Matrix circuit_unitary(const Circuit& c);

// Teleportation circuits in measurement-free form (classical bits replaced
// by quantum controls). Factor order: input first, output last.
//   one-bit:  [a, b],     gates CX(a→b), F(a), CZ⁻¹(a,b)
//   two-bit:  [a, c, b],  gates CX⁻¹(a→c), F(a), CX⁻¹(c→b), CZ⁻¹(a,b)
// with_correction=false drops the final controlled-phase gate.
Circuit one_bit_teleport(int d, bool with_correction = true);
Circuit two_bit_teleport(int d, bool with_correction = true);

// Fixed non-input wires of the protocols: |0> for one-bit, |B0> for two-bit.
Ket teleport_fixed_input(int bits, int d);
// Run the protocol on `input` and return fidelity <ψ|ρ_out|ψ> at the output
// factor.
double teleport_fidelity(const Circuit& c, const Ket& input);

// Maximally entangled pair Σ_j |jj>/√d.
Ket bell_ket(int d = 2);

// Channel ket: prepend Σ|j>_ref ⊗ |j>_input /√d between a fresh reference
// factor and the circuit's input factor, fix the remaining factors to `rest`
// (a ket on them jointly, empty Ket for none), apply the circuit. The result
// lives on [d_input] + circuit shape, reference first.
Ket channel_ket(const Circuit& c, int input_factor, const Ket& rest);

// Map-state duality. ket_to_map expands |psi> = Σ_j |a_j>|φ_j> in `basis` on
// the first factor and returns M = Σ_j |φ_j><a_j|; map_to_ket inverts it.
Matrix ket_to_map(const Ket& psi, const SystemShape& shape, const OrthonormalBasis& basis);
Ket map_to_ket(const Matrix& m, const OrthonormalBasis& basis);

// Two-arm interferometer with an environment qubit recording which-way
// information of strength lambda in [0,1] (environment overlap 1-lambda).
// interferometer() returns the particle⊗environment ket after the second
// beamsplitter; exit_probabilities returns (Pr[g], Pr[h]).
Ket interferometer(double lambda);
std::pair<double, double> exit_probabilities(double lambda);
// Same, from an already-computed particle⊗environment output ket.
std::pair<double, double> exit_probabilities(const Ket& final_state);
// Channel-ket view for information analysis: reference qubit (particle after
// the first beamsplitter) ⊗ particle just before the second beamsplitter ⊗
// environment, shape [2,2,2].
Ket interferometer_channel_ket(double lambda);

}  // namespace qit
