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

using namespace fca;

namespace {

GradedOperator random_monomial(std::mt19937_64& rng, const CellWindow& w) {
  std::uniform_int_distribution<int> pick(2 * w.lo, 2 * w.hi + 1);
  std::uniform_int_distribution<int> len(0, 2 * w.num_cells());
  std::set<Mode> modes;
  const int k = len(rng);
  for (int i = 0; i < k; ++i) modes.insert(static_cast<Mode>(pick(rng)));
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  return GradedOperator::monomial(Modes(modes.begin(), modes.end()),
                                  Complex(coeff(rng), coeff(rng)));
}

}  // namespace

TEST_CASE("identity maps to the identity matrix") {
  for (int n = 1; n <= 4; ++n) {
    const CellWindow w(0, n - 1);
    CHECK(jw_matrix(GradedOperator::identity(), w).is_identity(0.0));
  }
}

TEST_CASE("jw string convention") {
  const CellWindow w(0, 2);
  // xi_2 = Z x X x I with cell 0 most significant.
  const CMatrix m = jw_matrix(GradedOperator::x(1), w);
  // Column |000> = 0 should map to |010> = 2 with phase +1.
  CHECK(m.at(2, 0) == Complex(1.0, 0.0));
  // Column |100> = 4 maps to |110> = 6 with the Z-string phase -1.
  CHECK(m.at(6, 4) == Complex(-1.0, 0.0));
}

TEST_CASE("support outside window is rejected") {
  const CellWindow w(0, 1);
  CHECK_THROWS_AS(jw_matrix(GradedOperator::x(2), w), DomainError);
}

TEST_CASE("oracle is a homomorphism on random monomial pairs") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> cells(1, 5);
  for (int rep = 0; rep < 200; ++rep) {
    const CellWindow w(0, cells(rng) - 1);
    const GradedOperator a = random_monomial(rng, w);
    const GradedOperator b = random_monomial(rng, w);
    const CMatrix lhs = jw_matrix(a * b, w);
    const CMatrix rhs = matmul(jw_matrix(a, w), jw_matrix(b, w));
    CHECK(lhs.max_abs_diff(rhs) < 1e-12);
    // Linearity.
    const CMatrix sum = jw_matrix(a + b, w);
    CHECK(sum.max_abs_diff(jw_matrix(a, w) + jw_matrix(b, w)) < 1e-12);
  }
}

TEST_CASE("adjoint commutes with the representation") {
  std::mt19937_64 rng(103);
  const CellWindow w(0, 2);
  for (int rep = 0; rep < 50; ++rep) {
    GradedOperator a;
    for (int t = 0; t < 4; ++t) a += random_monomial(rng, w);
    CHECK(jw_matrix(a.adjoint(), w).max_abs_diff(jw_matrix(a, w).adjoint()) <
          1e-12);
  }
}

TEST_CASE("operator_from_matrix inverts jw_matrix") {
  std::mt19937_64 rng(107);
  const CellWindow w(-1, 1);
  for (int rep = 0; rep < 30; ++rep) {
    GradedOperator a;
    for (int t = 0; t < 5; ++t) a += random_monomial(rng, w);
    const GradedOperator back = operator_from_matrix(jw_matrix(a, w), w, 1e-13);
    CHECK(approx_equal(a, back, 1e-11));
  }
}

TEST_CASE("parallel matmul matches the serial reference") {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  for (int n : {3, 17, 64, 128}) {
    CMatrix a(n), b(n);
    for (int i = 0; i < n * n; ++i) {
      a.a[i] = Complex(val(rng), val(rng));
      b.a[i] = Complex(val(rng), val(rng));
    }
    const CMatrix fast = matmul(a, b);
    const CMatrix slow = matmul_serial(a, b);
    CHECK(fast.max_abs_diff(slow) < 1e-12);
  }
}

TEST_CASE("matrix_exp against a closed form") {
  // exp(i theta Z) = diag(e^{i theta}, e^{-i theta}).
  const double theta = 0.7;
  const CellWindow w(0, 0);
  const CMatrix z = jw_matrix(GradedOperator::z(0), w);
  const CMatrix e = matrix_exp(z.scaled(Complex(0.0, theta)));
  CHECK(std::abs(e.at(0, 0) - Complex(std::cos(theta), std::sin(theta))) <
        1e-12);
  CHECK(std::abs(e.at(1, 1) - Complex(std::cos(theta), -std::sin(theta))) <
        1e-12);
  CHECK(std::abs(e.at(0, 1)) < 1e-12);

  // Matches the symbolic single-mode unitary.
  const GradedOperator u = single_mode_unitary(theta, 0, 0);
  CHECK(jw_matrix(u, w).max_abs_diff(e) < 1e-12);
}

TEST_CASE("unitarity check") {
  CHECK(is_unitary(GradedOperator::x(0), 1e-12));
  CHECK(is_unitary(single_mode_unitary(1.1, 1, 2), 1e-12));
  CHECK_FALSE(is_unitary(GradedOperator::x(0) + GradedOperator::identity(),
                         1e-12));
}
