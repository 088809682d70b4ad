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

#include "fca/automaton.hpp"

#include <cmath>
#include <sstream>

namespace fca {

namespace {

constexpr double kChop = 1e-12;

GradedOperator conjugate_by(const GradedOperator& u, const GradedOperator& op) {
  // Heisenberg orientation of Def. 3: O -> U^dag O U.
  return (u.adjoint() * op * u).chopped(kChop);
}

// Controlled-phase gate on cells (c, c+1), diagonal in the Z basis with
// bottom-right entry e^{i phi}.
GradedOperator cphase_gate(int c, double phi) {
  const GradedOperator p0 = GradedOperator::proj(c, 0);
  const GradedOperator p1 = GradedOperator::proj(c, 1);
  GradedOperator right = GradedOperator::proj(c + 1, 0) +
                         Complex(std::cos(phi), std::sin(phi)) *
                             GradedOperator::proj(c + 1, 1);
  return (p0 + p1 * right).chopped(kChop);
}

}  // namespace

Automaton Automaton::identity() { return conjugation(0.0, 0); }

Automaton Automaton::shift(int direction) {
  if (direction != 1 && direction != -1)
    throw InputError("shift: direction must be +-1");
  Automaton a;
  a.kind_ = Kind::Shift;
  a.direction_ = direction;
  return a;
}

Automaton Automaton::majorana_shift(int direction, bool inverted) {
  if (direction != 1 && direction != -1)
    throw InputError("majorana_shift: direction must be +-1");
  Automaton a;
  a.kind_ = Kind::MajoranaShift;
  a.direction_ = direction;
  a.inverted_ = inverted;
  return a;
}

Automaton Automaton::conjugation(double theta, int n) {
  if (n != 0 && n != 1) throw InputError("conjugation: n must be 0 or 1");
  Automaton a;
  a.kind_ = Kind::Conjugation;
  a.theta_ = theta;
  a.n_ = n;
  return a;
}

Automaton Automaton::controlled_phase(double phi, double theta, int n) {
  if (n != 0 && n != 1) throw InputError("controlled_phase: n must be 0 or 1");
  Automaton a;
  a.kind_ = Kind::ControlledPhase;
  a.phi_ = phi;
  a.theta_ = theta;
  a.n_ = n;
  return a;
}

Automaton Automaton::forking(double theta, int n) {
  if (n != 0 && n != 1) throw InputError("forking: n must be 0 or 1");
  Automaton a;
  a.kind_ = Kind::Forking;
  a.theta_ = theta;
  a.n_ = n;
  return a;
}

Automaton Automaton::custom(LocalRule rule) {
  Automaton a;
  a.kind_ = Kind::Custom;
  a.rule_ = std::make_shared<const LocalRule>(std::move(rule));
  return a;
}

Automaton Automaton::composition(std::vector<Automaton> factors) {
  if (factors.empty()) return identity();
  if (factors.size() == 1) return factors.front();
  Automaton a;
  a.kind_ = Kind::Composition;
  a.factors_ = std::move(factors);
  return a;
}

std::string Automaton::name() const {
  std::ostringstream oss;
  switch (kind_) {
    case Kind::Custom:
      return "custom";
    case Kind::Shift:
      oss << "shift(" << (direction_ > 0 ? "+1" : "-1") << ")";
      return oss.str();
    case Kind::MajoranaShift:
      oss << "majorana-shift(" << (direction_ > 0 ? "+" : "-")
          << (inverted_ ? ", inverted" : "") << ")";
      return oss.str();
    case Kind::Conjugation:
      oss << "conjugation(theta=" << theta_ << ", n=" << n_ << ")";
      return oss.str();
    case Kind::ControlledPhase:
      oss << "controlled-phase(phi=" << phi_ << ", theta=" << theta_
          << ", n=" << n_ << ")";
      return oss.str();
    case Kind::Forking:
      oss << "forking(theta=" << theta_ << ", n=" << n_ << ")";
      return oss.str();
    case Kind::Composition: {
      oss << "composition[";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) oss << " o ";
        oss << factors_[i].name();
      }
      oss << "]";
      return oss.str();
    }
  }
  return "?";
}

void Automaton::build_rule() const {
  if (rule_) return;
  LocalRule r;
  const GradedOperator x0 = GradedOperator::x(0);
  const GradedOperator y0 = GradedOperator::y(0);
  switch (kind_) {
    case Kind::Custom:
      throw Error("custom automaton without a rule");
    case Kind::Shift:
      r.image_x = x0.translated(direction_);
      r.image_y = y0.translated(direction_);
      r.nbhd = Neighbourhood({direction_});
      break;
    case Kind::MajoranaShift: {
      if (!inverted_) {
        // sigma_+-: (X_x, Y_x) -> (Y_x, X_{x+-1}).
        r.image_x = y0;
        r.image_y = GradedOperator::x(direction_);
        r.nbhd = Neighbourhood({0, direction_});
      } else {
        // sigma_+-^{-1}: (X_x, Y_x) -> (Y_{x-+1}, X_x).
        r.image_x = GradedOperator::y(-direction_);
        r.image_y = x0;
        r.nbhd = Neighbourhood({-direction_, 0});
      }
      break;
    }
    case Kind::Conjugation: {
      const GradedOperator u = single_mode_unitary(theta_, n_, 0);
      r.image_x = conjugate_by(u, x0);
      r.image_y = conjugate_by(u, y0);
      r.nbhd = Neighbourhood({0});
      break;
    }
    case Kind::ControlledPhase: {
      const GradedOperator u = single_mode_unitary(theta_, n_, 0);
      const GradedOperator g = cphase_gate(-1, phi_) * cphase_gate(0, phi_);
      r.image_x = conjugate_by(g, conjugate_by(u, x0));
      r.image_y = conjugate_by(g, conjugate_by(u, y0));
      r.nbhd = Neighbourhood({-1, 0, 1});
      break;
    }
    case Kind::Forking: {
      // U T~ U^dag with T~: (X_x, Y_x) -> (Y_{x-1}, X_{x+1}); the rotation
      // acts on the image cells, matching the Margolus gates (U x U) M.
      const GradedOperator um = single_mode_unitary(theta_, n_, -1);
      const GradedOperator up = single_mode_unitary(theta_, n_, 1);
      r.image_x = (um * GradedOperator::y(-1) * um.adjoint()).chopped(kChop);
      r.image_y = (up * GradedOperator::x(1) * up.adjoint()).chopped(kChop);
      r.nbhd = Neighbourhood({-1, 0, 1});
      break;
    }
    case Kind::Composition: {
      GradedOperator ix = x0;
      GradedOperator iy = y0;
      Neighbourhood sum({0});
      for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        ix = it->apply_unbounded(ix);
        iy = it->apply_unbounded(iy);
        sum = sum + it->rule().nbhd;
      }
      r.image_x = ix;
      r.image_y = iy;
      r.nbhd = sum;
      break;
    }
  }
  rule_ = std::make_shared<const LocalRule>(std::move(r));
}

const LocalRule& Automaton::rule() const {
  build_rule();
  return *rule_;
}

LocalRule Automaton::effective_rule() const {
  const LocalRule& r = rule();
  std::set<int> cells = r.image_x.support_cells(kChop);
  for (int c : r.image_y.support_cells(kChop)) cells.insert(c);
  cells.insert(0);
  LocalRule eff;
  eff.image_x = r.image_x.chopped(kChop);
  eff.image_y = r.image_y.chopped(kChop);
  eff.nbhd = Neighbourhood(std::vector<int>(cells.begin(), cells.end()));
  return eff;
}

GradedOperator apply_rule(const LocalRule& rule, const GradedOperator& op) {
  GradedOperator out;
  for (const auto& [modes, coeff] : op.terms()) {
    GradedOperator acc = GradedOperator::identity();
    acc *= coeff;
    for (Mode m : modes) {
      const int cell = cell_of_mode(m);
      const GradedOperator& img = (m & 1) ? rule.image_y : rule.image_x;
      acc = acc * img.translated(cell);
    }
    out += acc;
  }
  return out;
}

GradedOperator Automaton::apply_unbounded(const GradedOperator& op) const {
  if (kind_ == Kind::Composition) {
    GradedOperator acc = op;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
      acc = it->apply_unbounded(acc);
    return acc;
  }
  return apply_rule(rule(), op);
}

GradedOperator Automaton::apply(const GradedOperator& op,
                                const CellWindow& w) const {
  if (!op.supported_within(w))
    throw DomainError("apply: operator support outside window " + w.str());
  const Neighbourhood& nb = rule().nbhd;
  for (int c : op.support_cells()) {
    if (c + nb.min() < w.lo || c + nb.max() > w.hi)
      throw DomainError("apply: window " + w.str() +
                        " too small for support + neighbourhood");
  }
  return apply_unbounded(op);
}

Automaton compose(const Automaton& a, const Automaton& b) {
  std::vector<Automaton> factors;
  auto flatten = [&factors](const Automaton& f) {
    if (f.kind() == Automaton::Kind::Composition) {
      for (const Automaton& g : f.factors()) factors.push_back(g);
    } else {
      factors.push_back(f);
    }
  };
  flatten(a);
  flatten(b);
  return Automaton::composition(std::move(factors));
}

Automaton invert(const Automaton& aut) {
  switch (aut.kind()) {
    case Automaton::Kind::Shift:
      return Automaton::shift(-aut.direction());
    case Automaton::Kind::MajoranaShift:
      return Automaton::majorana_shift(aut.direction(), !aut.inverted());
    case Automaton::Kind::Conjugation:
      // U(theta,1) is self-inverse as a conjugation; U(theta,0)^dag = U(-theta,0).
      return aut.n() == 1 ? aut : Automaton::conjugation(-aut.theta(), 0);
    case Automaton::Kind::ControlledPhase: {
      // T = CP(phi,0,0) o Conj(theta,n); invert factor-wise.
      const Automaton conj_inv = invert(Automaton::conjugation(aut.theta(), aut.n()));
      const Automaton cp_inv = Automaton::controlled_phase(-aut.phi(), 0.0, 0);
      return compose(conj_inv, cp_inv);
    }
    case Automaton::Kind::Forking: {
      // T = conj_U o T~ with T~ an involution, so T^{-1} = T~ o conj_U^{-1}.
      const Automaton u = Automaton::conjugation(aut.theta(), aut.n());
      // conj_U here acts as O -> U O U^dag on the images, which is the
      // inverse orientation of the Conjugation automaton; undo it with the
      // Conjugation automaton itself.
      return compose(Automaton::forking(0.0, 0), u);
    }
    case Automaton::Kind::Composition: {
      std::vector<Automaton> inv;
      for (auto it = aut.factors().rbegin(); it != aut.factors().rend(); ++it)
        inv.push_back(invert(*it));
      return Automaton::composition(std::move(inv));
    }
    case Automaton::Kind::Custom:
      throw DomainError("invert: custom-rule inversion is out of scope");
  }
  throw Error("invert: unreachable");
}

}  // namespace fca
