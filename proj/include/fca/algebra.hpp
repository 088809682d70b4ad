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

#pragma once

#include <set>
#include <vector>

#include "fca/operators.hpp"

namespace fca {

// Linear-independence threshold when orthonormalizing; far from both zero
// and the smallest genuine components at desk scale.
constexpr double kRankTol = 1e-10;

// Orthonormal basis of a product-closed graded subspace.  Every element is
// parity-homogeneous and the identity lies in the span.
struct AlgebraBasis {
  std::vector<GradedOperator> elements;
  std::set<int> carrier;

  int dimension() const { return static_cast<int>(elements.size()); }
  bool contains(const GradedOperator& op, double tol = kRankTol) const;
  bool same_span(const AlgebraBasis& other, double tol = kRankTol) const;
  int parity_dimension(int grade) const;
};

// Smallest unital product-closed span containing the generators.  Iterates
// pair products with Gram-Schmidt reduction until the dimension is stable
// for two rounds (it terminates: dimension <= 4^{\#cells}).
AlgebraBasis algebra_closure(const std::vector<GradedOperator>& generators,
                             double tol = kRankTol);

// Support algebra of `ops` on `cells`: each op is decomposed over the
// canonical monomial basis of its complement (the complement monomials are a
// linearly independent family), the collected factors on `cells` are then
// product-closed.  Throws InputError on numerically degenerate input.
AlgebraBasis support_algebra(const std::vector<GradedOperator>& ops,
                             const std::set<int>& cells,
                             double tol = kRankTol);

struct AlgebraClass {
  enum class Variant { FullMatrix, Clifford };
  Variant variant = Variant::FullMatrix;
  int p_plus_q = 1;  // (p, q) reported as p+q only: the index needs no split

  int m() const { return variant == Variant::Clifford ? 2 : 1; }
  int dim() const { return m() * p_plus_q * p_plus_q; }
  std::string str() const;
};

// Lemma-4 classification of a support algebra: Clifford Cl_1(p|q) when an
// odd element commutes with the whole algebra, else full-matrix M(p|q).
// Throws DomainError when dim is not (p+q)^2 or 2(p+q)^2.
AlgebraClass classify_algebra(const AlgebraBasis& basis,
                              double tol = kRankTol);

}  // namespace fca
