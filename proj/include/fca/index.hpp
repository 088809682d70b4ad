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

#include <string>

#include "fca/algebra.hpp"
#include "fca/automaton.hpp"

namespace fca {

// Exact index value 2^{log2_num / 2}, with the (m, p+q, d) provenance of
// ind = sqrt(m) (p+q) / d.  No floats anywhere in the arithmetic.
struct IndexValue {
  int log2_num = 0;
  static constexpr int log2_den = 2;
  int m = 1;
  int p_plus_q = 1;
  int d = 1;

  double value() const;
  bool is_one() const { return log2_num == 0; }
  IndexValue inverse() const;
  // Index with canonical (m, p+q, d) provenance for a given exponent.
  static IndexValue from_log2(int log2_num);
  std::string str() const;

  friend IndexValue operator*(IndexValue a, const IndexValue& b);
  friend bool operator==(const IndexValue& a, const IndexValue& b) {
    return a.log2_num == b.log2_num;
  }
};

// Abstraction over anything that evolves operators (automata, circuits) so
// the index machinery can serve both.
class OperatorMap {
 public:
  virtual ~OperatorMap() = default;
  virtual GradedOperator transform(const GradedOperator& op) const = 0;
  // Bounds [min, max] on the support spread of single-cell images.
  virtual std::pair<int, int> spread() const = 0;
  // Cell period of translation invariance (1 for automata, 2 for Margolus).
  virtual int period() const { return 1; }
};

class AutomatonMap : public OperatorMap {
 public:
  explicit AutomatonMap(const Automaton& aut) : aut_(aut) {}
  GradedOperator transform(const GradedOperator& op) const override;
  std::pair<int, int> spread() const override;

 private:
  const Automaton& aut_;
};

struct IndexComputation {
  IndexValue index;
  AlgebraBasis left;    // L_{2x}
  AlgebraBasis right;   // R_{2x+1}
  int block = 1;        // cells per supercell used for the computation
};

// ind[T] = sqrt(dim L_{2x} / dim A_{2x}), cross-checked against
// sqrt(dim A_{2x+1} / dim R_{2x+1}) and the factorization
// dim L * dim R = dim T(A_{2x} x A_{2x+1}).  `base_cell` shifts the site at
// which the supports are computed (the result is site-independent).
IndexComputation compute_index_detailed(const OperatorMap& map,
                                        int base_cell = 0,
                                        double tol = kRankTol);

IndexValue compute_index(const OperatorMap& map, double tol = kRankTol);
IndexValue compute_index(const Automaton& aut, double tol = kRankTol);

// ind[a o b] == ind[a] ind[b], exactly.
bool check_multiplicativity(const Automaton& a, const Automaton& b,
                            double tol = kRankTol);

}  // namespace fca
