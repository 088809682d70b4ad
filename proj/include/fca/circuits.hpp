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

#include <optional>
#include <variant>
#include <vector>

#include "fca/index.hpp"

namespace fca {

// Finitely supported unitary acting by conjugation O -> u O u^dag.  The
// unitary must be parity-homogeneous; layers apply gates blockwise, which is
// what makes odd gates (the forking M_x) well defined.  Synthesized gates
// sit on contiguous cells; ancilla-removal rehoming also produces scattered
// supports.
struct Gate {
  GradedOperator unitary;
  std::vector<int> cells;  // sorted, unique

  static Gate on_cells(GradedOperator u, std::vector<int> cells);
  // Support + unitarity + homogeneity check through the oracle.
  void check(double tol = 1e-10) const;
  int grade() const { return unitary.grade(1e-12); }
};

// One circuit layer: disjointly supported gates, either explicit or as a
// periodic template (gate anchored at cell `offset`, repeated every `period`
// cells).  Templates materialize only the gates fully inside a window.
struct Layer {
  struct Periodic {
    Gate gate;    // anchored at its own cells; translated copies tile Z
    int period = 2;
  };
  std::variant<Periodic, std::vector<Gate>> content;

  static Layer periodic(Gate gate, int period);
  static Layer explicit_gates(std::vector<Gate> gates);
  std::vector<Gate> materialize(const CellWindow& w) const;
  bool is_periodic() const;
  int period() const;  // 0 for explicit layers
  int max_gate_extent() const;
};

// Finite-depth Fermionic circuit: layers applied first-to-last by
// conjugation.
struct Fdfc {
  std::vector<Layer> layers;

  int depth() const { return static_cast<int>(layers.size()); }
  bool empty() const;
  // Total light-cone half-width: how far support can spread.
  int light_cone() const;
};

// Blockwise conjugation of one layer: each canonical monomial factors into
// per-gate parts (sign from the stable regrouping), each part maps through
// its gate, the images multiply back in the same order.
GradedOperator conjugate_layer(const std::vector<Gate>& gates,
                               const GradedOperator& op);

// Layer-by-layer conjugation; requires w to contain support(op) plus the
// light cone of the circuit depth.
GradedOperator conjugate(const Fdfc& circuit, const GradedOperator& op,
                         const CellWindow& w);

GradedOperator conjugate_unbounded(const Fdfc& circuit,
                                   const GradedOperator& op);

// OperatorMap adapter so circuits feed the index machinery.
class CircuitMap : public OperatorMap {
 public:
  explicit CircuitMap(const Fdfc& c) : c_(c) {}
  GradedOperator transform(const GradedOperator& op) const override;
  std::pair<int, int> spread() const override;
  int period() const override;

 private:
  const Fdfc& c_;
};

// Margolus scheme: depth exactly 2, nearest-neighbour bonds.  The first
// layer acts on bonds {2x + first_offset, 2x + first_offset + 1}, the second
// on the complementary bonds.
struct MargolusScheme {
  Gate first_gate;    // anchored on cells {a, a+1}
  Gate second_gate;   // anchored on the complementary bond parity
  Fdfc as_fdfc() const;
};

// M_x = (X x Z) e^{-pi/4 Y_x x X_{x+1}}, the two-cell unitary whose
// blockwise conjugation swaps Y_left with X_right and fixes the other two
// generators.  `fixup` = false omits the (X x Z) factor (sign-error variant).
GradedOperator forking_gate(int cell, bool fixup = true);

// Margolus scheme implementing forking(theta, n): first layer M_{2x+1} on
// odd bonds, second layer (U x U) M_{2x} on even bonds.
MargolusScheme synthesize_forking_ms(double theta, int n, bool fixup = true);

// Staggered C_phi^dag layers plus a single-cell U(theta,n)^dag layer whose
// conjugation reproduces controlled_phase(phi, theta, n).
Fdfc synthesize_controlled_phase(double phi, double theta, int n);

// Single layer of one-cell gates reproducing conjugation(theta, n); the
// identity parameters give an empty circuit.
Fdfc synthesize_local_conjugation(double theta, int n);

// Lemma-7 check: the automaton induced by the circuit has index one.
bool circuit_index_is_one(const Fdfc& circuit, double tol = kRankTol);

struct NotEquivalent {
  IndexValue ratio;  // exact index ratio ind(t)/ind(s)
};

using EquivalenceWitness = std::variant<Fdfc, NotEquivalent>;

// If ind(t) != ind(s), returns the exact ratio.  Otherwise classifies
// t o s^{-1}, synthesizes its circuit and verifies
// conjugate(F, apply(s, g)) = apply(t, g) on the generators.
EquivalenceWitness equivalence_witness(const Automaton& t, const Automaton& s,
                                       double tol = 1e-10);

// Circuit synthesis for an already-classified unit-index automaton; see
// classify.hpp for the Classification type.
struct Classification;
Fdfc synthesize_circuit(const Classification& cls);

}  // namespace fca
