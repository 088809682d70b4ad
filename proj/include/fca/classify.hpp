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

#include "fca/algebra.hpp"
#include "fca/automaton.hpp"
#include "fca/index.hpp"

namespace fca {

// Support algebras of the image of the cell-0 algebra on cells -1, 0, +1.
struct EdgeSupports {
  AlgebraBasis e_left;
  AlgebraBasis e_center;
  AlgebraBasis e_right;
};

EdgeSupports compute_edge_supports(const LocalRule& rule,
                                   double tol = kRankTol);

// Result of the nearest-neighbour classification.  `peeled` lists the shift
// factors removed before the unit-index stage, outermost first; the index of
// the input is the product of the peel indices (each 2^{+-1} or 2^{+-1/2}).
struct Classification {
  enum class Family { LocalConjugation, ControlledPhase, Forking };

  Family family = Family::LocalConjugation;
  double phi = 0.0;    // controlled-phase angle
  double theta = 0.0;  // single-mode rotation
  int n = 0;           // single-mode X flip

  // Forking inputs whose generators need a cell-local basis change before
  // reaching the two-edge normal form carry it here (identity otherwise).
  double domain_theta = 0.0;
  int domain_n = 0;
  bool has_domain_rotation = false;

  struct Peel {
    bool majorana = false;  // false: shift, true: Majorana shift
    int direction = 0;      // +-1
    bool right_side = false;  // T = peel o inner (left) vs T = inner o peel
  };
  std::vector<Peel> peeled;

  IndexValue index() const;
  std::string str() const;
};

// Complete classification of a valid finite-neighbourhood rule over one
// Fermionic mode per cell: peel shifts / Majorana shifts by index, then
// dispatch the unit-index residual on its edge supports.  Throws DomainError
// for invalid rules and for unit-index rules outside the three families.
Classification classify(const LocalRule& rule, double tol = 1e-9);
Classification classify(const Automaton& aut, double tol = 1e-9);

// Parameter extraction for a unit-index rule with the family already known.
struct ExtractedParameters {
  double phi = 0.0;
  double theta = 0.0;
  int n = 0;
  double domain_theta = 0.0;
  int domain_n = 0;
  bool has_domain_rotation = false;
};

ExtractedParameters extract_parameters(const LocalRule& rule,
                                       Classification::Family family,
                                       double tol = 1e-9);

// Rebuilds the classified automaton from its parameters (peels included).
Automaton reconstruct(const Classification& cls);

}  // namespace fca
