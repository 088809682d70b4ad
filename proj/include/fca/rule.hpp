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
#include <vector>

#include "fca/operators.hpp"

namespace fca {

// Finite neighbourhood scheme N subset Z.
struct Neighbourhood {
  std::vector<int> offsets;  // sorted, unique, non-empty

  Neighbourhood() = default;
  explicit Neighbourhood(std::vector<int> offs);

  int min() const { return offsets.front(); }
  int max() const { return offsets.back(); }
  bool contains(int x) const;
  bool nearest_neighbour() const { return min() >= -1 && max() <= 1; }

  // Sumset N_a + N_b, for composed automata.
  friend Neighbourhood operator+(const Neighbourhood& a,
                                 const Neighbourhood& b);
  std::string str() const;
};

// Images of the two cell-0 generators on a finite neighbourhood.  A valid
// rule determines the whole automaton.
struct LocalRule {
  GradedOperator image_x;
  GradedOperator image_y;
  Neighbourhood nbhd;
};

struct Violation {
  std::string condition;
  std::string detail;
};

// Empty = valid.
struct ValidityReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  std::string str() const;
};

// Checks, in order: odd parity of both images; CAR preservation (images
// self-adjoint, square to I, anticommute -- T0 must be a *-homomorphism on
// the cell algebra); support inside the neighbourhood; and for every x != 0
// with N and N + x overlapping, element-wise graded commutation of the
// images against their x-translates.  Each failure names the witnessing pair.
ValidityReport validate_local_rule(const LocalRule& rule, double tol = 1e-10);

}  // namespace fca
