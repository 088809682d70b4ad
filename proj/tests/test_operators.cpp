// Copyright 2026 The fcachain authors
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

#include <random>

#include "fca/jw.hpp"
#include "fca/operators.hpp"

using namespace fca;

namespace {

GradedOperator random_monomial(std::mt19937_64& rng, int max_cell) {
  std::uniform_int_distribution<int> pick(0, 2 * max_cell + 1);
  std::uniform_int_distribution<int> len(0, 4);
  std::set<Mode> modes;
  const int k = len(rng);
  for (int i = 0; i < k; ++i) modes.insert(static_cast<Mode>(pick(rng)));
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  return GradedOperator::monomial(Modes(modes.begin(), modes.end()),
                                  Complex(coeff(rng), coeff(rng)));
}

GradedOperator random_operator(std::mt19937_64& rng, int max_cell,
                               int terms) {
  GradedOperator op;
  for (int t = 0; t < terms; ++t) op += random_monomial(rng, max_cell);
  return op;
}

}  // namespace

TEST_CASE("car relations hold symbolically") {
  // xi_i xi_j + xi_j xi_i = 0 for i != j, xi_i^2 = I.
  for (Mode i = 0; i < 8; ++i) {
    for (Mode j = 0; j < 8; ++j) {
      const GradedOperator a = GradedOperator::mode(i);
      const GradedOperator b = GradedOperator::mode(j);
      if (i == j) {
        CHECK(approx_equal(a * b, GradedOperator::identity(), 0.0));
      } else {
        CHECK(anticommutator(a, b).is_zero());
      }
    }
  }
}

TEST_CASE("single mode products") {
  const GradedOperator x0 = GradedOperator::x(0);
  // xi_0 xi_0 = I
  CHECK(approx_equal(x0 * x0, GradedOperator::identity(), 0.0));
  // xi_1 xi_0 = -xi_0 xi_1
  const GradedOperator left = GradedOperator::mode(1) * GradedOperator::mode(0);
  CHECK(left.coeff({0, 1}) == Complex(-1.0, 0.0));
  CHECK(left.num_terms() == 1);
}

TEST_CASE("x0 y0 squared matches the oracle") {
  const CellWindow w(0, 0);
  const GradedOperator a = GradedOperator::x(0) * GradedOperator::y(0);
  // Oracle route on the [0,0] window.
  const CMatrix ma = jw_matrix(a, w);
  const CMatrix sq = matmul(ma, ma);
  CHECK(sq.is_identity(1e-14));
  // Symbolic route agrees.
  CHECK(approx_equal(a * a, GradedOperator::identity(), 0.0));
}

TEST_CASE("pauli matrix representation on one cell") {
  const CellWindow w(0, 0);
  const CMatrix mx = jw_matrix(GradedOperator::x(0), w);
  CHECK(mx.at(0, 1) == Complex(1.0, 0.0));
  CHECK(mx.at(1, 0) == Complex(1.0, 0.0));
  CHECK(mx.at(0, 0) == Complex(0.0, 0.0));

  const CMatrix my = jw_matrix(GradedOperator::y(0), w);
  CHECK(my.at(0, 1) == Complex(0.0, -1.0));
  CHECK(my.at(1, 0) == Complex(0.0, 1.0));

  // Z = i Y X has matrix diag(1, -1) in the occupation basis.
  const CMatrix mz = jw_matrix(GradedOperator::z(0), w);
  CHECK(mz.at(0, 0) == Complex(1.0, 0.0));
  CHECK(mz.at(1, 1) == Complex(-1.0, 0.0));

  const GradedOperator z_from_product =
      Complex(0.0, 1.0) * (GradedOperator::y(0) * GradedOperator::x(0));
  CHECK(approx_equal(z_from_product, GradedOperator::z(0), 0.0));
}

TEST_CASE("graded commutator dispatch") {
  const GradedOperator x0 = GradedOperator::x(0);
  const GradedOperator y0 = GradedOperator::y(0);
  const GradedOperator z0 = GradedOperator::z(0);

  // Odd pair: anticommutator. {X0, Y0} = 0.
  CHECK(graded_commutator(x0, y0).is_zero());
  // Even operator commutes with itself.
  CHECK(graded_commutator(z0, z0).is_zero());

  // [[X0, Z0]] = c Y0 with c fixed by the oracle (not the paper's -i).
  const CellWindow w(0, 0);
  const CMatrix mx = jw_matrix(x0, w);
  const CMatrix mz = jw_matrix(z0, w);
  const CMatrix comm = matmul(mx, mz) - matmul(mz, mx);
  const GradedOperator oracle = operator_from_matrix(comm, w);
  CHECK(oracle.num_terms() == 1);
  const Complex c = oracle.coeff({1});
  CHECK(std::abs(c - Complex(0.0, -2.0)) < 1e-14);  // c = -2i
  CHECK(approx_equal(graded_commutator(x0, z0), oracle, 1e-14));

  // Mixed-parity input is rejected.
  CHECK_THROWS_AS(graded_commutator(x0 + z0, y0), DomainError);
}

TEST_CASE("disjoint support graded commutators vanish") {
  const GradedOperator x0 = GradedOperator::x(0);
  const GradedOperator y5 = GradedOperator::y(5);
  const GradedOperator z3 = GradedOperator::z(3);
  CHECK(graded_commutator(x0, y5).is_zero());   // odd-odd: anticommutator
  CHECK(graded_commutator(x0, z3).is_zero());   // odd-even: commutator
  CHECK(graded_commutator(z3, GradedOperator::z(7)).is_zero());
}

TEST_CASE("translate") {
  const GradedOperator x0 = GradedOperator::x(0);
  CHECK(approx_equal(x0.translated(3), GradedOperator::x(3), 0.0));
  const GradedOperator a =
      GradedOperator::z(1) + Complex(0.5, 0.0) * GradedOperator::x(0);
  CHECK(approx_equal(a.translated(0), a, 0.0));
  CHECK(approx_equal(a.translated(2).translated(-2), a, 0.0));
}

TEST_CASE("canonicalization is idempotent and unique") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const GradedOperator a = random_operator(rng, 3, 5);
    const GradedOperator b = random_operator(rng, 3, 5);
    // Same value assembled in two different orders gives the same terms.
    GradedOperator lhs = a + b;
    GradedOperator rhs = b + a;
    CHECK(max_coeff_diff(lhs, rhs) == 0.0);
    // Re-adding every term reproduces the map exactly.
    GradedOperator rebuilt;
    for (const auto& [m, c] : lhs.terms()) rebuilt.add_term(m, c);
    CHECK(max_coeff_diff(lhs, rebuilt) == 0.0);
  }
}

TEST_CASE("grade additivity for homogeneous operators") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 40) {
    GradedOperator a = random_operator(rng, 3, 4).parity_part(checked % 2);
    GradedOperator b = random_operator(rng, 3, 4).parity_part((checked / 2) % 2);
    if (a.is_zero() || b.is_zero()) continue;
    const GradedOperator p = a * b;
    if (!p.is_zero())
      CHECK(p.grade() == (a.grade() ^ b.grade()));
    ++checked;
  }
}

TEST_CASE("support of products is contained in the union") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 40; ++rep) {
    const GradedOperator a = random_operator(rng, 4, 4);
    const GradedOperator b = random_operator(rng, 4, 4);
    std::set<int> uni = a.support_cells();
    for (int c : b.support_cells()) uni.insert(c);
    for (int c : (a * b).support_cells()) CHECK(uni.count(c) == 1);
  }
}

TEST_CASE("hs_inner is the normalized trace inner product") {
  CHECK(hs_inner(GradedOperator::x(0), GradedOperator::x(0)) ==
        Complex(1.0, 0.0));
  CHECK(hs_inner(GradedOperator::x(0), GradedOperator::y(0)) ==
        Complex(0.0, 0.0));

  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    const GradedOperator a = random_operator(rng, 2, 5);
    // <A, A> = sum |coeff|^2, and matches tr(A^dag A)/2^n via the oracle.
    double want = 0.0;
    for (const auto& [m, c] : a.terms()) want += std::norm(c);
    CHECK(std::abs(hs_inner(a, a).real() - want) < 1e-12);
    CHECK(std::abs(hs_inner(a, a).imag()) < 1e-12);

    const CellWindow w(0, 2);
    const CMatrix ma = jw_matrix(a, w);
    const CMatrix prod = matmul(ma.adjoint(), ma);
    Complex tr(0.0, 0.0);
    for (int i = 0; i < prod.n; ++i) tr += prod.at(i, i);
    tr /= static_cast<double>(prod.n);
    CHECK(std::abs(tr - hs_inner(a, a)) < 1e-12);
  }
}

TEST_CASE("adjoint is an involutive antihomomorphism") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 30; ++rep) {
    const GradedOperator a = random_operator(rng, 3, 4);
    const GradedOperator b = random_operator(rng, 3, 4);
    CHECK(approx_equal(a.adjoint().adjoint(), a, 0.0));
    CHECK(approx_equal((a * b).adjoint(), b.adjoint() * a.adjoint(), 1e-12));
  }
}

TEST_CASE("single mode unitary group") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  for (int n = 0; n <= 1; ++n) {
    const double theta = angle(rng);
    const GradedOperator u = single_mode_unitary(theta, n, 0);
    CHECK(u.is_homogeneous(1e-12));
    CHECK(is_unitary(u, 1e-12));
  }
  // U(theta, 0) is even, U(theta, 1) odd.
  CHECK(single_mode_unitary(0.4, 0, 0).grade(1e-12) == 0);
  CHECK(single_mode_unitary(0.4, 1, 0).grade(1e-12) == 1);
}

TEST_CASE("relabel cells") {
  const GradedOperator a = GradedOperator::x(0) * GradedOperator::y(2);
  const GradedOperator b = a.relabel_cells({{0, 2}, {2, 0}});
  // xi_0 xi_5 -> xi_4 xi_1 = -xi_1 xi_4.
  CHECK(b.coeff({1, 4}) == Complex(-1.0, 0.0));
  // Relabeling is a CAR automorphism: products map to products.
  const GradedOperator p = a * a;
  CHECK(approx_equal(b * b, p.relabel_cells({{0, 2}, {2, 0}}), 1e-14));
}
