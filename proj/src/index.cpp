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

#include "fca/index.hpp"

#include <cmath>
#include <sstream>

namespace fca {

double IndexValue::value() const {
  return std::pow(2.0, static_cast<double>(log2_num) / 2.0);
}

IndexValue IndexValue::from_log2(int log2_num) {
  IndexValue out;
  out.log2_num = log2_num;
  if (log2_num % 2 == 0) {
    const int k = log2_num / 2;
    if (k >= 0) {
      out.p_plus_q = 1 << k;
    } else {
      out.d = 1 << (-k);
    }
  } else {
    out.m = 2;
    // value = sqrt(2) 2^k with k = (log2_num - 1) / 2 (floor).
    const int k = (log2_num - 1) >= 0 ? (log2_num - 1) / 2
                                      : -((1 - log2_num) / 2);
    if (k >= 0) {
      out.p_plus_q = 1 << k;
    } else {
      out.d = 1 << (-k);
    }
  }
  return out;
}

IndexValue IndexValue::inverse() const { return from_log2(-log2_num); }

std::string IndexValue::str() const {
  std::ostringstream oss;
  if (log2_num == 0) {
    oss << "1";
  } else if (log2_num % 2 == 0) {
    oss << "2^" << log2_num / 2;
  } else {
    oss << "2^(" << log2_num << "/2)";
  }
  return oss.str();
}

IndexValue operator*(IndexValue a, const IndexValue& b) {
  a.log2_num += b.log2_num;
  a.m = 1;
  a.p_plus_q = 1;
  a.d = 1;
  return a;
}

GradedOperator AutomatonMap::transform(const GradedOperator& op) const {
  return aut_.apply_unbounded(op);
}

std::pair<int, int> AutomatonMap::spread() const {
  const LocalRule r = aut_.effective_rule();
  return {r.nbhd.min(), r.nbhd.max()};
}

IndexComputation compute_index_detailed(const OperatorMap& map, int base_cell,
                                        double tol) {
  const auto [lo_spread, hi_spread] = map.spread();
  int k = std::max({1, -lo_spread, hi_spread});
  const int period = std::max(1, map.period());
  if (k % period != 0) k += period - (k % period);

  // Supercells of k cells; the pair under study covers cells
  // [base, base + 2k - 1], its left/right halves being supercells A_{2x} and
  // A_{2x+1}.  base_cell is given in supercell pair units.
  const int base = base_cell * 2 * k;
  std::vector<GradedOperator> images;
  for (int c = base; c < base + 2 * k; ++c) {
    images.push_back(map.transform(GradedOperator::x(c)));
    images.push_back(map.transform(GradedOperator::y(c)));
  }

  std::set<int> left_cells, right_cells;
  for (int c = base - k; c < base + k; ++c) left_cells.insert(c);
  for (int c = base + k; c < base + 3 * k; ++c) right_cells.insert(c);
  for (const GradedOperator& img : images) {
    for (int c : img.support_cells(tol)) {
      if (!left_cells.count(c) && !right_cells.count(c))
        throw DomainError(
            "compute_index: image escapes the blocked two-supercell region");
    }
  }

  IndexComputation out;
  out.block = k;
  out.left = support_algebra(images, left_cells, tol);
  out.right = support_algebra(images, right_cells, tol);

  const int dim_cell = 1 << (2 * k);  // dim A_supercell = 4^k
  const long full = static_cast<long>(out.left.dimension()) *
                    static_cast<long>(out.right.dimension());
  if (full != static_cast<long>(dim_cell) * static_cast<long>(dim_cell))
    throw DomainError(
        "compute_index: support factorization dim L * dim R != dim T(A x A); "
        "the map is not a valid automaton");

  auto log2_exact = [](int v) {
    int l = 0;
    while ((1 << l) < v) ++l;
    if ((1 << l) != v)
      throw DomainError("compute_index: support dimension is not a power of 2");
    return l;
  };
  const int log_l = log2_exact(out.left.dimension());
  const int log_r = log2_exact(out.right.dimension());
  const int from_left = log_l - 2 * k;
  const int from_right = 2 * k - log_r;
  if (from_left != from_right)
    throw DomainError(
        "compute_index: L- and R-based index values disagree; invalid automaton");

  out.index.log2_num = from_left;
  const AlgebraClass cls = classify_algebra(out.left, tol);
  out.index.m = cls.m();
  out.index.p_plus_q = cls.p_plus_q;
  out.index.d = 1 << k;
  return out;
}

IndexValue compute_index(const OperatorMap& map, double tol) {
  return compute_index_detailed(map, 0, tol).index;
}

IndexValue compute_index(const Automaton& aut, double tol) {
  return compute_index(AutomatonMap(aut), tol);
}

bool check_multiplicativity(const Automaton& a, const Automaton& b,
                            double tol) {
  const IndexValue ia = compute_index(a, tol);
  const IndexValue ib = compute_index(b, tol);
  const IndexValue iab = compute_index(compose(a, b), tol);
  return iab == ia * ib;
}

}  // namespace fca
