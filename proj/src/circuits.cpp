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

#include "fca/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "fca/classify.hpp"
#include "fca/jw.hpp"

namespace fca {

namespace {
constexpr double kChop = 1e-12;
constexpr double kSqrtHalf = 0.70710678118654752440084436210485;
}  // namespace

Gate Gate::on_cells(GradedOperator u, std::vector<int> cells) {
  Gate g;
  g.unitary = std::move(u);
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  g.cells = std::move(cells);
  return g;
}

void Gate::check(double tol) const {
  for (int c : unitary.support_cells(kChop)) {
    if (!std::binary_search(cells.begin(), cells.end(), c))
      throw DomainError("gate: unitary support outside its cells");
  }
  if (!unitary.is_homogeneous(kChop))
    throw DomainError("gate: unitary must be parity-homogeneous");
  if (!is_unitary(unitary, tol))
    throw DomainError("gate: U U^dag != I under the oracle");
}

Layer Layer::periodic(Gate gate, int period) {
  if (period <= 0) throw InputError("layer: period must be positive");
  Layer l;
  l.content = Periodic{std::move(gate), period};
  return l;
}

Layer Layer::explicit_gates(std::vector<Gate> gates) {
  Layer l;
  l.content = std::move(gates);
  return l;
}

bool Layer::is_periodic() const {
  return std::holds_alternative<Periodic>(content);
}

int Layer::period() const {
  return is_periodic() ? std::get<Periodic>(content).period : 0;
}

int Layer::max_gate_extent() const {
  auto extent = [](const Gate& g) {
    return g.cells.empty() ? 1 : g.cells.back() - g.cells.front() + 1;
  };
  if (is_periodic()) return extent(std::get<Periodic>(content).gate);
  int worst = 1;
  for (const Gate& g : std::get<std::vector<Gate>>(content))
    worst = std::max(worst, extent(g));
  return worst;
}

std::vector<Gate> Layer::materialize(const CellWindow& w) const {
  if (!is_periodic()) {
    std::vector<Gate> inside;
    for (const Gate& g : std::get<std::vector<Gate>>(content)) {
      if (g.cells.empty()) continue;
      if (g.cells.front() >= w.lo && g.cells.back() <= w.hi)
        inside.push_back(g);
    }
    return inside;
  }
  const Periodic& p = std::get<Periodic>(content);
  const int glo = p.gate.cells.front();
  const int ghi = p.gate.cells.back();
  std::vector<Gate> out;
  // Scan the translated copies glo + t*period .. ghi + t*period inside w.
  for (int t = (w.lo - ghi) / p.period - 2; t <= (w.hi - glo) / p.period + 2;
       ++t) {
    const int lo = glo + t * p.period;
    const int hi = ghi + t * p.period;
    if (lo < w.lo || hi > w.hi) continue;
    Gate g;
    g.unitary = p.gate.unitary.translated(t * p.period);
    g.cells.reserve(p.gate.cells.size());
    for (int c : p.gate.cells) g.cells.push_back(c + t * p.period);
    out.push_back(std::move(g));
  }
  return out;
}

bool Fdfc::empty() const {
  for (const Layer& l : layers) {
    if (l.is_periodic()) return false;
    if (!std::get<std::vector<Gate>>(l.content).empty()) return false;
  }
  return true;
}

int Fdfc::light_cone() const {
  int total = 0;
  for (const Layer& l : layers) total += l.max_gate_extent() - 1;
  return total;
}

GradedOperator conjugate_layer(const std::vector<Gate>& gates,
                               const GradedOperator& op) {
  // Owner lookup: cell -> gate index.
  std::map<int, int> owner;
  for (std::size_t gi = 0; gi < gates.size(); ++gi) {
    for (int c : gates[gi].cells) {
      if (!owner.emplace(c, static_cast<int>(gi)).second)
        throw DomainError("layer: gates overlap on cell " + std::to_string(c));
    }
  }

  GradedOperator out;
  const int free_rank = static_cast<int>(gates.size());
  for (const auto& [modes, coeff] : op.terms()) {
    // Stable regrouping of the mode list by owning gate (free modes last);
    // the images preserve each part's grade, so the regrouping sign carries
    // over to the image product unchanged.
    std::vector<Modes> parts(gates.size() + 1);
    int inversions = 0;
    std::vector<int> ranks;
    ranks.reserve(modes.size());
    for (Mode m : modes) {
      auto it = owner.find(cell_of_mode(m));
      const int rank = it == owner.end() ? free_rank : it->second;
      for (int r : ranks)
        if (r > rank) ++inversions;
      ranks.push_back(rank);
      parts[rank].push_back(m);
    }

    GradedOperator acc = GradedOperator::identity();
    acc *= (inversions % 2 == 0) ? coeff : -coeff;
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
      if (parts[gi].empty()) continue;
      const GradedOperator part = GradedOperator::monomial(parts[gi], 1.0);
      acc = acc * (gates[gi].unitary * part * gates[gi].unitary.adjoint());
    }
    if (!parts[free_rank].empty())
      acc = acc * GradedOperator::monomial(parts[free_rank], 1.0);
    out += acc;
  }
  return out.chopped(kChop);
}

GradedOperator conjugate_unbounded(const Fdfc& circuit,
                                   const GradedOperator& op) {
  if (op.is_zero()) return op;
  GradedOperator acc = op;
  for (const Layer& layer : circuit.layers) {
    const std::set<int> cells = acc.support_cells(kChop);
    if (cells.empty()) continue;
    const int margin = layer.max_gate_extent() + layer.period() + 2;
    const CellWindow w(*cells.begin() - margin, *cells.rbegin() + margin);
    acc = conjugate_layer(layer.materialize(w), acc);
  }
  return acc;
}

GradedOperator conjugate(const Fdfc& circuit, const GradedOperator& op,
                         const CellWindow& w) {
  if (!op.supported_within(w))
    throw DomainError("conjugate: operator support outside window " + w.str());
  const std::set<int> cells = op.support_cells();
  if (!cells.empty()) {
    const int cone = circuit.light_cone();
    if (*cells.begin() - cone < w.lo || *cells.rbegin() + cone > w.hi)
      throw DomainError("conjugate: window " + w.str() +
                        " smaller than support plus light cone");
  }
  GradedOperator acc = op;
  for (const Layer& layer : circuit.layers)
    acc = conjugate_layer(layer.materialize(w), acc);
  return acc;
}

GradedOperator CircuitMap::transform(const GradedOperator& op) const {
  return conjugate_unbounded(c_, op);
}

std::pair<int, int> CircuitMap::spread() const {
  const int cone = c_.light_cone();
  return {-cone, cone};
}

int CircuitMap::period() const {
  int p = 1;
  for (const Layer& l : c_.layers) {
    if (!l.is_periodic()) {
      if (!std::get<std::vector<Gate>>(l.content).empty())
        throw DomainError(
            "circuit index: explicit (non-periodic) layers have no "
            "translation-invariant local rule");
      continue;
    }
    p = std::lcm(p, l.period());
  }
  return p;
}

Fdfc MargolusScheme::as_fdfc() const {
  Fdfc c;
  c.layers.push_back(Layer::periodic(first_gate, 2));
  c.layers.push_back(Layer::periodic(second_gate, 2));
  return c;
}

GradedOperator forking_gate(int cell, bool fixup) {
  // e^{-pi/4 Y_x X_{x+1}} = (I - Y_x X_{x+1}) / sqrt(2).
  GradedOperator rot = GradedOperator::identity();
  rot -= GradedOperator::y(cell) * GradedOperator::x(cell + 1);
  rot *= kSqrtHalf;
  if (!fixup) return rot;
  return GradedOperator::x(cell) * GradedOperator::z(cell + 1) * rot;
}

MargolusScheme synthesize_forking_ms(double theta, int n, bool fixup) {
  MargolusScheme ms;
  // M_1: gates M_{2x+1} on odd bonds.
  ms.first_gate = Gate::on_cells(forking_gate(1, fixup), {1, 2});
  // M_2: gates (U x U) M_{2x} on even bonds.
  const GradedOperator uu =
      single_mode_unitary(theta, n, 0) * single_mode_unitary(theta, n, 1);
  ms.second_gate =
      Gate::on_cells((uu * forking_gate(0, fixup)).chopped(kChop), {0, 1});
  return ms;
}

Fdfc synthesize_controlled_phase(double phi, double theta, int n) {
  Fdfc c;
  // Gate conjugation is u O u^dag while the automaton applies G^dag . G, so
  // the emitted gates are the adjoints of U(theta, n) and C_phi.
  const GradedOperator u = single_mode_unitary(theta, n, 0);
  if (!approx_equal(u, GradedOperator::identity(), kChop))
    c.layers.push_back(
        Layer::periodic(Gate::on_cells(u.adjoint(), {0}), 1));
  if (std::fmod(std::abs(phi), 2.0 * 3.141592653589793) > 1e-15) {
    const GradedOperator p0a = GradedOperator::proj(0, 0);
    const GradedOperator p1a = GradedOperator::proj(0, 1);
    const GradedOperator right =
        GradedOperator::proj(1, 0) +
        Complex(std::cos(phi), -std::sin(phi)) * GradedOperator::proj(1, 1);
    const GradedOperator cphi_dag = (p0a + p1a * right).chopped(kChop);
    c.layers.push_back(Layer::periodic(Gate::on_cells(cphi_dag, {0, 1}), 2));
    c.layers.push_back(
        Layer::periodic(Gate::on_cells(cphi_dag.translated(1), {1, 2}), 2));
  }
  return c;
}

Fdfc synthesize_local_conjugation(double theta, int n) {
  Fdfc c;
  const GradedOperator u = single_mode_unitary(theta, n, 0);
  if (!approx_equal(u, GradedOperator::identity(), kChop))
    c.layers.push_back(Layer::periodic(Gate::on_cells(u.adjoint(), {0}), 1));
  return c;
}

bool circuit_index_is_one(const Fdfc& circuit, double tol) {
  if (circuit.empty()) return true;
  return compute_index(CircuitMap(circuit), tol).is_one();
}

Fdfc synthesize_circuit(const Classification& cls) {
  if (!cls.index().is_one())
    throw DomainError(
        "synthesis refused: a QCA is implementable by a circuit if and only "
        "if its index is equal to one; this automaton has index " +
        cls.index().str());
  switch (cls.family) {
    case Classification::Family::LocalConjugation:
      return synthesize_local_conjugation(cls.theta, cls.n);
    case Classification::Family::ControlledPhase:
      return synthesize_controlled_phase(cls.phi, cls.theta, cls.n);
    case Classification::Family::Forking: {
      MargolusScheme ms = synthesize_forking_ms(cls.theta, cls.n);
      Fdfc c = ms.as_fdfc();
      if (cls.has_domain_rotation) {
        // T = T' o D: prepend the domain rotation as a single-cell layer.
        const Fdfc d =
            synthesize_local_conjugation(cls.domain_theta, cls.domain_n);
        c.layers.insert(c.layers.begin(), d.layers.begin(), d.layers.end());
      }
      return c;
    }
  }
  throw Error("synthesize_circuit: unreachable");
}

EquivalenceWitness equivalence_witness(const Automaton& t_in,
                                       const Automaton& s_in, double tol) {
  // Custom automata are made invertible through their classification.
  auto canonical = [&](const Automaton& a) {
    if (a.kind() != Automaton::Kind::Custom) return a;
    return reconstruct(classify(a));
  };
  const Automaton t = canonical(t_in);
  const Automaton s = canonical(s_in);

  const IndexValue it = compute_index(t);
  const IndexValue is = compute_index(s);
  if (!(it == is)) return NotEquivalent{it * is.inverse()};

  const Automaton diff = compose(t, invert(s));
  const Classification cls = classify(diff);
  const Fdfc f = synthesize_circuit(cls);

  // Verify conjugate(F, apply(s, g)) = apply(t, g) on the generators.
  for (int cell : {0, 1}) {
    for (const GradedOperator& g :
         {GradedOperator::x(cell), GradedOperator::y(cell)}) {
      const GradedOperator lhs =
          conjugate_unbounded(f, s.apply_unbounded(g));
      const GradedOperator rhs = t.apply_unbounded(g);
      if (!approx_equal(lhs, rhs, tol))
        throw DomainError("equivalence witness failed verification");
    }
  }
  return f;
}

}  // namespace fca
