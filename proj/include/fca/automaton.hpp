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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fca/rule.hpp"

namespace fca {

// Translation-invariant FCA, represented by its local rule.  Built-in kinds
// keep their parameters so that inversion and classification stay exact;
// compositions are kept lazy as a factor list.
class Automaton {
 public:
  enum class Kind {
    Custom,
    Shift,           // tau_{+-1}
    MajoranaShift,   // sigma_{+-}, optionally inverted
    Conjugation,     // O -> U(theta,n)^dag O U(theta,n) per cell
    ControlledPhase, // Eq.-(ev) family: G_phi^dag (U^dag O U) G_phi
    Forking,         // U T~ U^dag with T~: (X_x, Y_x) -> (Y_{x-1}, X_{x+1})
    Composition,
  };

  static Automaton identity();
  static Automaton shift(int direction);                       // +-1
  static Automaton majorana_shift(int direction, bool inverted = false);
  static Automaton conjugation(double theta, int n);
  static Automaton controlled_phase(double phi, double theta, int n);
  static Automaton forking(double theta, int n);
  static Automaton custom(LocalRule rule);
  static Automaton composition(std::vector<Automaton> factors);

  Kind kind() const { return kind_; }
  int direction() const { return direction_; }
  bool inverted() const { return inverted_; }
  double theta() const { return theta_; }
  double phi() const { return phi_; }
  int n() const { return n_; }
  const std::vector<Automaton>& factors() const { return factors_; }
  std::string name() const;

  // Declared rule.  For compositions the neighbourhood is the sumset of the
  // factor neighbourhoods and the images are expanded on demand.
  const LocalRule& rule() const;

  // Rule with the minimal neighbourhood actually touched by the images.
  LocalRule effective_rule() const;

  // Heisenberg evolution: every Majorana factor xi_{2x} (xi_{2x+1}) of each
  // canonical monomial is replaced by the translated image of X (Y), products
  // taken in the monomial's mode order.  Requires support(op) + N inside w.
  GradedOperator apply(const GradedOperator& op, const CellWindow& w) const;

  // Same, with no window bookkeeping (the computation is symbolic).
  GradedOperator apply_unbounded(const GradedOperator& op) const;

 private:
  Automaton() = default;

  Kind kind_ = Kind::Custom;
  int direction_ = 0;
  bool inverted_ = false;
  double theta_ = 0.0;
  double phi_ = 0.0;
  int n_ = 0;
  std::vector<Automaton> factors_;
  mutable std::shared_ptr<const LocalRule> rule_;  // lazily built

  void build_rule() const;
};

// (a o b) applies b first: compose(a, b).apply(op) = a.apply(b.apply(op)).
Automaton compose(const Automaton& a, const Automaton& b);

// Exact inverse for built-in kinds and their compositions.  Custom rules are
// not invertible here and raise DomainError.
Automaton invert(const Automaton& aut);

// Substitution of one monomial through a rule, in mode order.
GradedOperator apply_rule(const LocalRule& rule, const GradedOperator& op);

}  // namespace fca
