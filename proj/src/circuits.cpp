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

#include "qit/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qit/core.hpp"
#include "qit/kernels.hpp"

namespace qit {

namespace gates {

namespace {

int mod(long v, int d) {
  const long m = v % d;
  return static_cast<int>(m < 0 ? m + d : m);
}

}  // namespace

Matrix identity(int d) { return Matrix::Identity(d, d); }

Matrix shift(int d) {
  Matrix x = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) x(mod(j + 1, d), j) = 1.0;
  return x;
}

Matrix clock(int d) {
  const double w = 2.0 * std::numbers::pi / d;
  Matrix z = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) z(j, j) = std::polar(1.0, w * j);
  return z;
}

Matrix fourier(int d) {
  const double w = 2.0 * std::numbers::pi / d;
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  Matrix f(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) f(k, j) = std::polar(amp, w * j * k);
  return f;
}

Matrix hadamard() { return fourier(2); }

Matrix controlled_shift(int d, int power) {
  Matrix cx = Matrix::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      cx(j * d + mod(k + static_cast<long>(power) * j, d), j * d + k) = 1.0;
  return cx;
}

Matrix controlled_clock(int d, int power) {
  const double w = 2.0 * std::numbers::pi / d;
  Matrix cz = Matrix::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      cz(j * d + k, j * d + k) = std::polar(1.0, w * mod(static_cast<long>(power) * j * k, d));
  return cz;
}

Matrix by_name(const std::string& name, int d, int power) {
  if (name == "X") {
    Matrix x = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) x(mod(j + power, d), j) = 1.0;
    return x;
  }
  if (name == "Z") {
    const double w = 2.0 * std::numbers::pi / d;
    Matrix z = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) z(j, j) = std::polar(1.0, w * mod(static_cast<long>(power) * j, d));
    return z;
  }
  if (name == "H" || name == "F") {
    if (name == "H" && d != 2) throw DomainError("gate H is the d=2 Fourier; use F for qudits");
    if (power != 1) throw DomainError("gate " + name + " does not take a power");
    return fourier(d);
  }
  if (name == "CX") return controlled_shift(d, power);
  if (name == "CZ") return controlled_clock(d, power);
  throw DomainError("unknown gate name: " + name);
}

int arity(const std::string& name) {
  if (name == "X" || name == "Z" || name == "H" || name == "F") return 1;
  if (name == "CX" || name == "CZ") return 2;
  throw DomainError("unknown gate name: " + name);
}

}  // namespace gates

Circuit& Circuit::append(std::string gate, std::vector<int> factors, int power) {
  if (static_cast<int>(factors.size()) != gates::arity(gate))
    throw DimensionError("Circuit::append: gate " + gate + " takes " +
                         std::to_string(gates::arity(gate)) + " factor(s)");
  int d = 0;
  for (int f : factors) {
    const int df = shape_.dim(f);
    if (d == 0) d = df;
    if (df != d)
      throw DimensionError("Circuit::append: gate " + gate + " needs equal factor dimensions");
  }
  gates::by_name(gate, d, power);  // validates the name/power combination
  ops_.push_back(GateOp{std::move(gate), std::move(factors), power});
  return *this;
}

Circuit Circuit::without_final_gate() const {
  Circuit c(shape_);
  if (ops_.empty()) return c;
  for (size_t i = 0; i + 1 < ops_.size(); ++i)
    c.append(ops_[i].gate, ops_[i].factors, ops_[i].power);
  return c;
}

namespace {

Matrix embedded_gate(const GateOp& op, const SystemShape& shape) {
  const int d = shape.dim(op.factors[0]);
  return embed(gates::by_name(op.gate, d, op.power), shape, op.factors);
}

}  // namespace

Ket Circuit::apply(const Ket& input) const {
  shape_.require_total(input.size(), "Circuit::apply");
  Ket state = input;
  for (const GateOp& op : ops_) state = embedded_gate(op, shape_) * state;
  return state;
}

Matrix circuit_unitary(const Circuit& c) {
  const long n = c.shape().total();
  Matrix u = Matrix::Identity(n, n);
  for (const GateOp& op : c.ops()) u = embedded_gate(op, c.shape()) * u;
  return u;
}

Circuit one_bit_teleport(int d, bool with_correction) {
  if (d < 2) throw DomainError("one_bit_teleport: dimension must be at least 2");
  Circuit c(SystemShape{d, d});
  c.append("CX", {0, 1}, 1);
  c.append(d == 2 ? "H" : "F", {0});
  if (with_correction) c.append("CZ", {0, 1}, -1);
  return c;
}

Circuit two_bit_teleport(int d, bool with_correction) {
  if (d < 2) throw DomainError("two_bit_teleport: dimension must be at least 2");
  Circuit c(SystemShape{d, d, d});
  c.append("CX", {0, 1}, -1);
  c.append(d == 2 ? "H" : "F", {0});
  c.append("CX", {1, 2}, -1);
  if (with_correction) c.append("CZ", {0, 2}, -1);
  return c;
}

Ket bell_ket(int d) {
  Ket b = Ket::Zero(static_cast<long>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) b(static_cast<long>(j) * d + j) = amp;
  return b;
}

Ket teleport_fixed_input(int bits, int d) {
  if (bits == 1) {
    Ket zero = Ket::Zero(d);
    zero(0) = 1.0;
    return zero;
  }
  if (bits == 2) return bell_ket(d);
  throw DomainError("teleport_fixed_input: bits must be 1 or 2");
}

double teleport_fidelity(const Circuit& c, const Ket& input) {
  const int d = c.shape().dim(0);
  if (input.size() != d) throw DimensionError("teleport_fidelity: input dimension mismatch");
  const int last = c.shape().factors() - 1;
  Ket rest = (c.shape().factors() == 2) ? teleport_fixed_input(1, d) : teleport_fixed_input(2, d);
  Ket full = tensor(input, rest);
  Ket out = c.apply(full);
  const Matrix rho_out = reduced_density(out, c.shape(), {last});
  return (input.adjoint() * rho_out * input)(0, 0).real();
}

Ket channel_ket(const Circuit& c, int input_factor, const Ket& rest) {
  const SystemShape& shape = c.shape();
  const int d = shape.dim(input_factor);

  std::vector<int> rest_ids;
  long rest_dim = 1;
  for (int f = 0; f < shape.factors(); ++f) {
    if (f == input_factor) continue;
    rest_ids.push_back(f);
    rest_dim *= shape.dim(f);
  }
  if (rest.size() != rest_dim && !(rest_dim == 1 && rest.size() == 0))
    throw DimensionError("channel_ket: `rest` must cover the non-input factors jointly");

  // ordered [input, rest...] then permuted into circuit factor order
  std::vector<int> cur{input_factor};
  cur.insert(cur.end(), rest_ids.begin(), rest_ids.end());
  std::vector<int> perm(static_cast<size_t>(shape.factors()));
  for (int f = 0; f < shape.factors(); ++f) {
    const auto it = std::find(cur.begin(), cur.end(), f);
    perm[static_cast<size_t>(f)] = static_cast<int>(it - cur.begin());
  }
  SystemShape cur_shape = shape.subset(cur);

  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  Ket state = Ket::Zero(static_cast<long>(d) * shape.total());
  for (int j = 0; j < d; ++j) {
    Ket basis_j = Ket::Zero(d);
    basis_j(j) = 1.0;
    Ket inner = (rest.size() == 0) ? basis_j : tensor(basis_j, rest);
    inner = permute_factors(inner, cur_shape, perm);
    Ket ref_j = Ket::Zero(d);
    ref_j(j) = amp;
    state += tensor(ref_j, inner);
  }

  // circuit acts on everything but the fresh reference factor in front
  std::vector<int> full_dims{d};
  full_dims.insert(full_dims.end(), shape.dims().begin(), shape.dims().end());
  const SystemShape full_shape{full_dims};
  for (const GateOp& op : c.ops()) {
    std::vector<int> shifted = op.factors;
    for (int& f : shifted) ++f;
    const int gd = full_shape.dim(shifted[0]);
    state = embed(gates::by_name(op.gate, gd, op.power), full_shape, shifted) * state;
  }
  return state;
}

Matrix ket_to_map(const Ket& psi, const SystemShape& shape, const OrthonormalBasis& basis) {
  if (shape.factors() != 2) throw DimensionError("ket_to_map: shape must be bipartite");
  shape.require_total(psi.size(), "ket_to_map");
  if (basis.dim() != shape.dim(0))
    throw DimensionError("ket_to_map: basis must live on the first factor");
  const int da = shape.dim(0), df = shape.dim(1);
  Matrix m = Matrix::Zero(df, da);
  for (int j = 0; j < da; ++j) {
    Ket phi = Ket::Zero(df);
    for (int a = 0; a < da; ++a)
      for (int f = 0; f < df; ++f)
        phi(f) += std::conj(basis.ket(j)(a)) * psi(static_cast<long>(a) * df + f);
    m += phi * basis.ket(j).adjoint();
  }
  return m;
}

Ket map_to_ket(const Matrix& m, const OrthonormalBasis& basis) {
  const int da = static_cast<int>(m.cols());
  const int df = static_cast<int>(m.rows());
  if (basis.dim() != da) throw DimensionError("map_to_ket: basis dimension mismatch");
  Ket psi = Ket::Zero(static_cast<long>(da) * df);
  for (int j = 0; j < da; ++j) psi += tensor(basis.ket(j), Ket(m * basis.ket(j)));
  return psi;
}

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw DomainError("interferometer: decoherence strength must lie in [0, 1]");
}

Ket environment_e() {
  Ket e = Ket::Zero(2);
  e(0) = 1.0;
  return e;
}

Ket environment_f(double lambda) {
  Ket f(2);
  f(0) = 1.0 - lambda;
  f(1) = std::sqrt(lambda * (2.0 - lambda));  // keeps <e_env|f_env> = 1 - lambda
  return f;
}

// B' sends |e> to (|g>+|h>)/√2 and |f> to (-|g>+|h>)/√2, so the coherent
// superposition (|e>+|f>)/√2 exits at h.
Matrix second_beamsplitter() {
  Matrix b(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  b << s, -s, s, s;
  return b;
}

}  // namespace

Ket interferometer(double lambda) {
  check_lambda(lambda);
  const double s = 1.0 / std::sqrt(2.0);
  Ket e = Ket::Zero(2), f = Ket::Zero(2);
  e(0) = 1.0;
  f(1) = 1.0;
  Ket pre = s * (tensor(e, environment_e()) + tensor(f, environment_f(lambda)));
  return embed(second_beamsplitter(), SystemShape{2, 2}, {0}) * pre;
}

std::pair<double, double> exit_probabilities(const Ket& final_state) {
  if (final_state.size() != 4)
    throw DimensionError("exit_probabilities: expected a particle⊗environment ket of dim 4");
  double pg = 0.0, ph = 0.0;
  for (int env = 0; env < 2; ++env) {
    pg += std::norm(final_state(env));
    ph += std::norm(final_state(2 + env));
  }
  return {pg, ph};
}

std::pair<double, double> exit_probabilities(double lambda) {
  return exit_probabilities(interferometer(lambda));
}

Ket interferometer_channel_ket(double lambda) {
  check_lambda(lambda);
  const double s = 1.0 / std::sqrt(2.0);
  Ket state = Ket::Zero(8);  // [reference, particle, environment]
  const Ket ee = environment_e();
  const Ket ef = environment_f(lambda);
  for (int env = 0; env < 2; ++env) {
    state(0 * 4 + 0 * 2 + env) = s * ee(env);  // |e, e> branch
    state(1 * 4 + 1 * 2 + env) = s * ef(env);  // |f, f> branch
  }
  return state;
}

}  // namespace qit
