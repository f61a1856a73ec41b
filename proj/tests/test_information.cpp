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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qit/circuits.hpp"
#include "qit/fixtures.hpp"
#include "qit/information.hpp"
#include "qit/random.hpp"
#include "test_support.hpp"

using namespace qit;
using namespace qit::test;

namespace {

Matrix bell_rho() { return dyad(bell_ket(2)); }

Decomposition dz() { return basis_z(2).to_decomposition(); }
Decomposition dx() { return basis_x(2).to_decomposition(); }
Decomposition dy() { return basis_y().to_decomposition(); }

}  // namespace

TEST_CASE("conditional operators of a product state factorize") {
  Rng rng(31);
  const Matrix ra = random_density(2, rng);
  const Matrix rb = random_density(3, rng);
  const Matrix rho = tensor(ra, rb);
  const auto conds = conditional_operators(rho, SystemShape{2, 3}, dz());
  for (int j = 0; j < 2; ++j) {
    const double w = (projector_onto(basis_ket(2, j)) * ra).trace().real();
    CHECK(approx_equal(conds[static_cast<size_t>(j)], w * rb, 1e-13));
  }
}

TEST_CASE("conditional operators of the entangled pair in the Z basis") {
  const auto conds = conditional_operators(bell_rho(), SystemShape{2, 2}, dz());
  Matrix exp0 = Matrix::Zero(2, 2), exp1 = Matrix::Zero(2, 2);
  exp0(0, 0) = 0.5;
  exp1(1, 1) = 0.5;
  CHECK(approx_equal(conds[0], exp0, 1e-15));
  CHECK(approx_equal(conds[1], exp1, 1e-15));
}

TEST_CASE("conditional operator traces sum to the state's trace") {
  Rng rng(32);
  const Matrix rho = random_density(6, rng);
  const auto conds = conditional_operators(rho, SystemShape{2, 3}, dz());
  double total = 0.0;
  for (const Matrix& c : conds) total += c.trace().real();
  CHECK(std::abs(total - 1.0) <= 1e-12);
}

TEST_CASE("presence: entangled pair carries every qubit basis, products none") {
  CHECK(is_perfectly_present(bell_rho(), SystemShape{2, 2}, dz()));
  CHECK(is_perfectly_present(bell_rho(), SystemShape{2, 2}, dx()));
  CHECK(is_perfectly_present(bell_rho(), SystemShape{2, 2}, dy()));

  Rng rng(33);
  const Matrix prod = tensor(random_density(2, rng), random_density(2, rng));
  CHECK_FALSE(is_perfectly_present(prod, SystemShape{2, 2}, dz()));
  CHECK_FALSE(is_perfectly_present(prod, SystemShape{2, 2}, dx()));
}

TEST_CASE("zero-probability branches are excluded from the presence test") {
  // first factor pinned to |1>: the j=0 branch has no weight, leaving a
  // single active outcome, so the pairwise test is vacuously satisfied
  Rng rng(34);
  const Matrix rho = tensor(projector_onto(basis_ket(2, 1)), random_density(2, rng));
  CHECK(is_perfectly_present(rho, SystemShape{2, 2}, dz()));

  // the cutoff is configurable: a low-weight branch fails presence at the
  // default cutoff but is ignored once the cutoff exceeds its weight
  Matrix biased = Matrix::Zero(2, 2);
  biased(0, 0) = 0.99;
  biased(1, 1) = 0.01;
  const Matrix rho2 = tensor(biased, random_density(2, rng));
  CHECK_FALSE(is_perfectly_present(rho2, SystemShape{2, 2}, dz()));
  CHECK(is_perfectly_present(rho2, SystemShape{2, 2}, dz(), kDefaultTol,
                             /*weight_cutoff=*/0.05));
}

TEST_CASE("shared-X state: X present in each single qubit, Y and Z absent") {
  const Ket psi = fixtures::shared_x_state();
  const SystemShape q3{2, 2, 2};
  const Matrix rho = dyad(psi);

  for (int other : {1, 2}) {
    const auto [sub, sub_shape] = focus(rho, q3, 0, {other});
    CHECK(is_perfectly_present(sub, sub_shape, dx()));
    CHECK_FALSE(is_perfectly_absent(sub, sub_shape, dx()));
    CHECK(is_perfectly_absent(sub, sub_shape, dy()));
    CHECK(is_perfectly_absent(sub, sub_shape, dz()));
    CHECK_FALSE(is_perfectly_present(sub, sub_shape, dy()));
    CHECK_FALSE(is_perfectly_present(sub, sub_shape, dz()));
  }
  // everything about the first qubit is in the other two jointly
  CHECK(all_information_present(psi, q3));
}

TEST_CASE("absence: products are uncorrelated, the entangled pair is not") {
  Rng rng(35);
  const Matrix prod = tensor(random_density(2, rng), random_density(3, rng));
  CHECK(is_perfectly_absent(prod, SystemShape{2, 3}, dz()));
  CHECK(is_perfectly_absent(prod, SystemShape{2, 3}, dx()));
  CHECK_FALSE(is_perfectly_absent(bell_rho(), SystemShape{2, 2}, dz()));
}

TEST_CASE("presence and absence together force a single active branch") {
  Rng rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix rho = random_density(4, rng);
    const Decomposition v = haar_basis(2, rng).to_decomposition();
    const SystemShape shape{2, 2};
    if (is_perfectly_present(rho, shape, v) && is_perfectly_absent(rho, shape, v)) {
      const auto conds = conditional_operators(rho, shape, v);
      int active = 0;
      for (const Matrix& c : conds)
        if (c.trace().real() > kDefaultTol) ++active;
      CHECK(active <= 1);
    }
  }
}

TEST_CASE("witness decomposition of the entangled pair in the Z basis") {
  const Decomposition t = extract_witness_decomposition(bell_rho(), SystemShape{2, 2}, dz());
  REQUIRE(t.outcomes() == 2);  // no remainder needed
  CHECK(approx_equal(t.projector(0), projector_onto(basis_ket(2, 0)), 1e-10));
  CHECK(approx_equal(t.projector(1), projector_onto(basis_ket(2, 1)), 1e-10));
}

TEST_CASE("witness satisfies the measurement-correlation identity") {
  // <V_j T_k> = delta_jk <V_j> for states built with orthogonal branch supports
  Rng rng(37);
  for (int trial = 0; trial < 6; ++trial) {
    const int d = 2 + trial % 2;
    const OrthonormalBasis v = haar_basis(d, rng);
    const OrthonormalBasis b = haar_basis(d, rng);
    Ket psi = Ket::Zero(static_cast<long>(d) * d);
    std::vector<double> w(static_cast<size_t>(d));
    double sum = 0.0;
    for (double& x : w) sum += (x = 0.1 + rng.uniform());
    for (int j = 0; j < d; ++j)
      psi += std::sqrt(w[static_cast<size_t>(j)] / sum) * tensor(v.ket(j), b.ket(j));
    const SystemShape shape{d, d};
    const Matrix rho = dyad(psi);
    const Decomposition vd = v.to_decomposition();
    const Decomposition t = extract_witness_decomposition(rho, shape, vd);

    for (int j = 0; j < d; ++j) {
      const double vj = (embed(vd.projector(j), shape, {0}) * rho).trace().real();
      for (int k = 0; k < t.outcomes(); ++k) {
        const Matrix joint =
            embed(vd.projector(j), shape, {0}) * embed(t.projector(k), shape, {1});
        const double got = (joint * rho).trace().real();
        const double expected = (j == k) ? vj : 0.0;
        CHECK(std::abs(got - expected) <= 1e-10);
      }
    }
  }
}

TEST_CASE("witness for the one-bit teleport channel ket distinguishes the outputs") {
  const Ket ck = channel_ket(one_bit_teleport(2), 0, teleport_fixed_input(1, 2));
  const auto [rho, shape] = focus(dyad(ck), SystemShape{2, 2, 2}, 0, {2});
  const Decomposition t = extract_witness_decomposition(rho, shape, dz());
  REQUIRE(t.outcomes() == 2);
  CHECK(approx_equal(t.projector(0), projector_onto(basis_ket(2, 0)), 1e-10));
  CHECK(approx_equal(t.projector(1), projector_onto(basis_ket(2, 1)), 1e-10));
}

TEST_CASE("witness extraction refuses states without presence") {
  Rng rng(38);
  const Matrix prod = tensor(random_density(2, rng), random_density(2, rng));
  CHECK_THROWS_AS(extract_witness_decomposition(prod, SystemShape{2, 2}, dz()), DomainError);
}

TEST_CASE("all/no information checks on standard states") {
  CHECK(all_information_present(bell_ket(2), SystemShape{2, 2}));
  CHECK_FALSE(all_information_present(tensor(basis_ket(2, 0), basis_ket(2, 0)),
                                      SystemShape{2, 2}));
  CHECK_THROWS_AS(all_information_present(2.0 * bell_ket(2), SystemShape{2, 2}), DomainError);

  Rng rng(39);
  const Matrix prod = tensor(random_density(2, rng), random_density(2, rng));
  CHECK(no_information_present(prod, SystemShape{2, 2}));
  CHECK_FALSE(no_information_present(bell_rho(), SystemShape{2, 2}));
  CHECK_FALSE(no_information_present(fixtures::shared_x_marginal_ab(), SystemShape{2, 2}));
}

TEST_CASE("incompatibility graph of Z vs X is complete bipartite and connected") {
  const auto g = build_graph(basis_z(2), basis_x(2));
  CHECK(g.edges.size() == 4);
  CHECK(is_connected(g));
}

TEST_CASE("identical bases give a perfect matching, which is disconnected") {
  const auto g = build_graph(basis_z(2), basis_z(2));
  CHECK(g.edges.size() == 2);
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("block-diagonal basis pair at d=4 is disconnected with a fat commutant") {
  // two bases respecting the same 2+2 subspace split
  Rng rng(40);
  auto block_basis = [&](Rng& r) {
    const Matrix u0 = haar_unitary(2, r);
    const Matrix u1 = haar_unitary(2, r);
    std::vector<Ket> kets;
    for (int j = 0; j < 2; ++j) {
      Ket k = Ket::Zero(4);
      k.segment(0, 2) = u0.col(j);
      kets.push_back(k);
    }
    for (int j = 0; j < 2; ++j) {
      Ket k = Ket::Zero(4);
      k.segment(2, 2) = u1.col(j);
      kets.push_back(k);
    }
    return OrthonormalBasis(kets);
  };
  const OrthonormalBasis v = block_basis(rng);
  const OrthonormalBasis w = block_basis(rng);
  CHECK_FALSE(is_connected(build_graph(v, w)));
  const int cd = commutant_dimension({v.to_decomposition(), w.to_decomposition()});
  CHECK(cd >= 2);
  CHECK_FALSE(strongly_incompatible(v.to_decomposition(), w.to_decomposition()));
}

TEST_CASE("commutant of the trivial decomposition is the whole operator space") {
  const Decomposition trivial({Matrix::Identity(3, 3)});
  CHECK(commutant_dimension({trivial, trivial}) == 9);
  CHECK_FALSE(strongly_incompatible(trivial, trivial));
}

TEST_CASE("commutant of Z and X at d=2 is just the scalars") {
  CHECK(commutant_dimension({dz(), dx()}) == 1);
  CHECK(strongly_incompatible(dz(), dx()));
}

TEST_CASE("graph connectivity and commutant dimension agree on random basis pairs") {
  Rng rng(41);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 30; ++trial) {
      const OrthonormalBasis v = haar_basis(d, rng);
      const OrthonormalBasis w = haar_basis(d, rng);
      const bool graph = is_connected(build_graph(v, w));
      const bool commutant =
          commutant_dimension({v.to_decomposition(), w.to_decomposition()}) == 1;
      CHECK(graph == commutant);
    }
  }
}

TEST_CASE("mutual unbiasedness checks") {
  CHECK(mutually_unbiased(basis_z(2), basis_x(2)));
  CHECK_FALSE(mutually_unbiased(basis_z(2), basis_z(2)));
  CHECK(mutually_unbiased(basis_z(3), fourier_basis(3)));
}

TEST_CASE("truncation fixes operators already diagonal in the basis") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 0.3;
  a(1, 1) = -1.7;
  CHECK(approx_equal(truncate(a, dz()), a, 1e-15));
}

TEST_CASE("truncating a projector of an unbiased basis flattens it to I/d") {
  for (int d : {2, 3}) {
    const auto family = mub_family(d);
    const Decomposition v = family[0].to_decomposition();
    for (size_t m = 1; m < family.size(); ++m)
      for (const Ket& w : family[m].kets()) {
        const Matrix flat = truncate(projector_onto(w), v);
        CHECK((flat - Matrix::Identity(d, d) / static_cast<double>(d)).norm() <= 1e-12);
      }
  }
}

TEST_CASE("rank-1 truncation matches the diagonal-extraction oracle") {
  Rng rng(42);
  for (int trial = 0; trial < 6; ++trial) {
    const int d = 2 + trial % 3;
    const OrthonormalBasis v = haar_basis(d, rng);
    Matrix a(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) a(r, c) = rng.cnormal();
    Matrix oracle = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j)
      oracle += (v.ket(j).adjoint() * a * v.ket(j))(0, 0) * dyad(v.ket(j));
    CHECK(approx_equal(truncate(a, v.to_decomposition()), oracle, 1e-12));
  }
}

TEST_CASE("truncation is an idempotent trace-preserving projection") {
  Rng rng(43);
  for (int trial = 0; trial < 6; ++trial) {
    const int d = 2 + trial % 3;
    const Decomposition v = haar_basis(d, rng).to_decomposition();
    Matrix a(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) a(r, c) = rng.cnormal();
    const Matrix once = truncate(a, v);
    CHECK((truncate(once, v) - once).norm() <= 1e-12);
    CHECK(std::abs(once.trace() - a.trace()) <= 1e-12);
  }
}

TEST_CASE("focus moves an arbitrary factor to the front") {
  Rng rng(44);
  const Matrix ra = random_density(2, rng);
  const Matrix rb = random_density(3, rng);
  const Matrix rc = random_density(2, rng);
  const Matrix rho = tensor(tensor(ra, rb), rc);
  const auto [sub, sub_shape] = focus(rho, SystemShape{2, 3, 2}, 1, {2});
  CHECK(sub_shape == SystemShape{3, 2});
  CHECK(approx_equal(sub, tensor(rb, rc), 1e-12));
  CHECK_THROWS_AS(focus(rho, SystemShape{2, 3, 2}, 1, {1}), DimensionError);
}

TEST_CASE("dimension mismatches raise errors") {
  CHECK_THROWS_AS(conditional_operators(bell_rho(), SystemShape{2, 2}, basis_z(3).to_decomposition()),
                  DimensionError);
  CHECK_THROWS_AS(build_graph(basis_z(2), basis_z(3)), DimensionError);
  CHECK_THROWS_AS(truncate(Matrix::Identity(3, 3), dz()), DimensionError);
}
