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

#include "fca/algebra.hpp"

#include <cmath>
#include <map>

namespace fca {

namespace {

// Gram-Schmidt insert; returns true when op added a new direction.
bool gs_insert(std::vector<GradedOperator>& basis, GradedOperator op,
               double tol) {
  for (const GradedOperator& e : basis) {
    const Complex c = hs_inner(e, op);
    if (c != Complex(0.0, 0.0)) op -= c * e;
  }
  const double nrm = op.norm();
  if (nrm <= tol) return false;
  op *= Complex(1.0 / nrm, 0.0);
  basis.push_back(op.chopped(1e-15));
  return true;
}

}  // namespace

bool AlgebraBasis::contains(const GradedOperator& op, double tol) const {
  GradedOperator r = op;
  for (const GradedOperator& e : elements) {
    const Complex c = hs_inner(e, r);
    if (c != Complex(0.0, 0.0)) r -= c * e;
  }
  return r.norm() <= tol * std::max(1.0, op.norm());
}

bool AlgebraBasis::same_span(const AlgebraBasis& other, double tol) const {
  if (dimension() != other.dimension()) return false;
  for (const GradedOperator& e : elements)
    if (!other.contains(e, tol)) return false;
  for (const GradedOperator& e : other.elements)
    if (!contains(e, tol)) return false;
  return true;
}

int AlgebraBasis::parity_dimension(int grade) const {
  int d = 0;
  for (const GradedOperator& e : elements)
    if (e.grade(kRankTol) == grade) ++d;
  return d;
}

AlgebraBasis algebra_closure(const std::vector<GradedOperator>& generators,
                             double tol) {
  AlgebraBasis out;
  gs_insert(out.elements, GradedOperator::identity(), tol);
  for (const GradedOperator& g : generators) {
    // Split into parity components so the basis stays homogeneous.
    for (int grade : {0, 1}) {
      GradedOperator part = g.parity_part(grade);
      if (!part.is_zero(tol)) gs_insert(out.elements, part, tol);
    }
    for (int c : g.support_cells(tol)) out.carrier.insert(c);
  }

  int stable_rounds = 0;
  while (stable_rounds < 2) {
    bool grew = false;
    const std::size_t n = out.elements.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        GradedOperator p = out.elements[i] * out.elements[j];
        if (gs_insert(out.elements, std::move(p), tol)) grew = true;
      }
    }
    stable_rounds = grew ? 0 : stable_rounds + 1;
  }
  return out;
}

AlgebraBasis support_algebra(const std::vector<GradedOperator>& ops,
                             const std::set<int>& cells, double tol) {
  std::vector<GradedOperator> factors;
  for (const GradedOperator& op : ops) {
    if (op.norm() <= tol)
      throw InputError("support_algebra: numerically degenerate input");
    // Group terms by their complement-monomial part; the inner sums are the
    // factors b_{L,i} against the linearly independent complement family.
    std::map<Modes, GradedOperator> by_complement;
    for (const auto& [modes, coeff] : op.terms()) {
      Modes inside, outside;
      std::set<Mode> inside_set;
      for (Mode m : modes) {
        if (cells.count(cell_of_mode(m))) {
          inside.push_back(m);
          inside_set.insert(m);
        } else {
          outside.push_back(m);
        }
      }
      const int sign = split_sign(modes, inside_set);
      by_complement[outside].add_term(inside,
                                      static_cast<double>(sign) * coeff);
    }
    for (auto& [outside, factor] : by_complement) {
      if (!factor.is_zero(tol)) factors.push_back(std::move(factor));
    }
  }
  AlgebraBasis basis = algebra_closure(factors, tol);
  basis.carrier = cells;
  return basis;
}

std::string AlgebraClass::str() const {
  std::string s = variant == Variant::Clifford ? "Cl1(p|q)" : "M(p|q)";
  return s + " with p+q = " + std::to_string(p_plus_q);
}

AlgebraClass classify_algebra(const AlgebraBasis& basis, double tol) {
  // Look for an odd element commuting with every basis element: present in
  // Cl_1(p|q) (the Majorana-mode factor), absent in the simple M(p|q).
  std::vector<GradedOperator> odd;
  for (const GradedOperator& e : basis.elements)
    if (e.grade(tol) == 1) odd.push_back(e);

  bool has_odd_central = false;
  if (!odd.empty()) {
    // Nullspace of z -> ([z, e_j])_j over the odd sector, by Gram-Schmidt on
    // the constraint images: z = sum c_i odd_i with sum_i c_i [odd_i, e_j] = 0.
    // Solve by orthonormalizing the rows of the stacked commutator map.
    const std::size_t k = odd.size();
    std::vector<std::vector<Complex>> rows;  // each row: length k
    for (const GradedOperator& e : basis.elements) {
      // Collect commutators [odd_i, e]; register every monomial coordinate.
      std::vector<GradedOperator> comms;
      std::set<Modes> coords;
      for (const GradedOperator& z : odd) {
        GradedOperator c = commutator(z, e);
        for (const auto& [m, v] : c.terms()) coords.insert(m);
        comms.push_back(std::move(c));
      }
      for (const Modes& m : coords) {
        std::vector<Complex> row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = comms[i].coeff(m);
        rows.push_back(std::move(row));
      }
    }
    // Rank of the constraint matrix via modified Gram-Schmidt.
    std::vector<std::vector<Complex>> ortho;
    for (auto& row : rows) {
      for (const auto& o : ortho) {
        Complex dot(0.0, 0.0);
        for (std::size_t i = 0; i < k; ++i) dot += std::conj(o[i]) * row[i];
        for (std::size_t i = 0; i < k; ++i) row[i] -= dot * o[i];
      }
      double nrm = 0.0;
      for (const Complex& v : row) nrm += std::norm(v);
      nrm = std::sqrt(nrm);
      if (nrm > tol) {
        for (Complex& v : row) v /= nrm;
        ortho.push_back(row);
      }
    }
    has_odd_central = ortho.size() < k;  // nontrivial nullspace
  }

  AlgebraClass cls;
  const int dim = basis.dimension();
  if (has_odd_central) {
    cls.variant = AlgebraClass::Variant::Clifford;
    if (dim % 2 != 0)
      throw DomainError("classify_algebra: dimension not 2(p+q)^2");
    const int sq = dim / 2;
    const int root = static_cast<int>(std::lround(std::sqrt(sq)));
    if (root * root != sq)
      throw DomainError("classify_algebra: dimension not 2(p+q)^2");
    cls.p_plus_q = root;
  } else {
    cls.variant = AlgebraClass::Variant::FullMatrix;
    const int root = static_cast<int>(std::lround(std::sqrt(dim)));
    if (root * root != dim)
      throw DomainError("classify_algebra: dimension not (p+q)^2");
    cls.p_plus_q = root;
  }
  return cls;
}

}  // namespace fca
