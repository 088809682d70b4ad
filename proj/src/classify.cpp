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

#include "fca/classify.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace fca {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double mod_2pi(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  if (a > 2.0 * kPi - 1e-9) a = 0.0;
  return a;
}

// U(theta + pi, n) = -U(theta, n) acts identically by conjugation, so theta
// is recovered modulo pi.
double mod_pi(double a) {
  a = std::fmod(a, kPi);
  if (a < 0) a += kPi;
  if (a > kPi - 1e-9) a = 0.0;
  return a;
}

// Real (X, Y) coefficient pair of a single-cell odd operator.
struct OddVec {
  double x = 0.0;
  double y = 0.0;
  double norm() const { return std::hypot(x, y); }
};

OddVec odd_vec(const GradedOperator& op, int cell, double tol) {
  OddVec v;
  for (const auto& [modes, c] : op.terms()) {
    if (std::abs(c) <= tol) continue;
    if (modes.size() != 1 || cell_of_mode(modes[0]) != cell)
      throw DomainError("expected a single-cell odd operator at cell " +
                        std::to_string(cell));
    if (std::abs(c.imag()) > tol)
      throw DomainError("expected real coefficients (self-adjoint operator)");
    if (modes[0] & 1) {
      v.y = c.real();
    } else {
      v.x = c.real();
    }
  }
  return v;
}

// Solves image_x = U^dag X U, image_y = U^dag Y U for (theta, n); the
// coefficient matrix is a rotation (n = 0) or a reflection (n = 1):
//   n = 0: (X, Y) -> ( c X + s Y, -s X + c Y)
//   n = 1: (X, Y) -> ( c X - s Y, -s X - c Y)        c = cos 2t, s = sin 2t.
ExtractedParameters solve_conjugation(const OddVec& vx, const OddVec& vy,
                                      double tol) {
  const double det = vx.x * vy.y - vx.y * vy.x;
  ExtractedParameters out;
  if (std::abs(det - 1.0) < 1e-6) {
    out.n = 0;
    out.theta = mod_pi(0.5 * std::atan2(vx.y, vx.x));
  } else if (std::abs(det + 1.0) < 1e-6) {
    out.n = 1;
    out.theta = mod_pi(0.5 * std::atan2(-vx.y, vx.x));
  } else {
    throw DomainError("conjugation extraction: image matrix not orthogonal");
  }
  const double c = std::cos(2.0 * out.theta);
  const double s = std::sin(2.0 * out.theta);
  const double ey = out.n == 0 ? s : -s;
  const double fy = out.n == 0 ? c : -c;
  if (std::abs(vx.x - c) > tol || std::abs(vx.y - ey) > tol ||
      std::abs(vy.x + s) > tol || std::abs(vy.y - fy) > tol)
    throw DomainError("conjugation extraction: reconstruction mismatch");
  return out;
}

// Groups an image into sum_{a,b in {I,Z}} a_{-1} M_{ab} b_{+1}; throws when
// an outer factor is not I or Z (then the rule is not of controlled-phase
// form).  Index order: [a][b] with 0 = I, 1 = Z.
std::array<std::array<GradedOperator, 2>, 2> cp_blocks(
    const GradedOperator& img, double tol) {
  std::array<std::array<GradedOperator, 2>, 2> m;
  const Modes left_pair = {-2, -1};
  const Modes right_pair = {2, 3};
  for (const auto& [modes, coeff] : img.terms()) {
    if (std::abs(coeff) <= tol) continue;
    Modes left, mid, right;
    for (Mode mm : modes) {
      const int c = cell_of_mode(mm);
      if (c < 0) {
        left.push_back(mm);
      } else if (c > 0) {
        right.push_back(mm);
      } else {
        mid.push_back(mm);
      }
    }
    int a, b;
    Complex factor = coeff;
    if (left.empty()) {
      a = 0;
    } else if (left == left_pair) {
      a = 1;
      factor *= Complex(0.0, 1.0);  // xi_{-2} xi_{-1} = i Z_{-1}
    } else {
      throw DomainError("controlled-phase extraction: odd outer factor");
    }
    if (right.empty()) {
      b = 0;
    } else if (right == right_pair) {
      b = 1;
      factor *= Complex(0.0, 1.0);
    } else {
      throw DomainError("controlled-phase extraction: odd outer factor");
    }
    // An ascending mode list already orders left < mid < right: no sign.
    m[a][b].add_term(mid, factor);
  }
  return m;
}

double rotation_angle(const OddVec& from, const OddVec& to) {
  const double dot = from.x * to.x + from.y * to.y;
  const double cross = from.x * to.y - from.y * to.x;
  return std::atan2(cross, dot);
}

OddVec rotate(const OddVec& v, double angle) {
  return {v.x * std::cos(angle) - v.y * std::sin(angle),
          v.x * std::sin(angle) + v.y * std::cos(angle)};
}

ExtractedParameters extract_local_conjugation(const LocalRule& rule,
                                              double tol) {
  const OddVec vx = odd_vec(rule.image_x, 0, tol);
  const OddVec vy = odd_vec(rule.image_y, 0, tol);
  return solve_conjugation(vx, vy, tol);
}

ExtractedParameters extract_controlled_phase(const LocalRule& rule,
                                             double tol) {
  const auto mx = cp_blocks(rule.image_x, 1e-12);
  const auto my = cp_blocks(rule.image_y, 1e-12);

  // A_{ij} = sum_{ab} (-1)^{i a + j b} M_{ab}.
  auto block = [](const std::array<std::array<GradedOperator, 2>, 2>& m,
                  int i, int j) {
    GradedOperator out;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const double sign = ((i * a + j * b) % 2 == 0) ? 1.0 : -1.0;
        out += Complex(sign, 0.0) * m[a][b];
      }
    return out;
  };

  // A_00 = U^dag xi U fixes (theta, n).
  const OddVec ax00 = odd_vec(block(mx, 0, 0), 0, tol);
  const OddVec ay00 = odd_vec(block(my, 0, 0), 0, tol);
  ExtractedParameters out = solve_conjugation(ax00, ay00, tol);

  // A_{ij} = rotate(A_00, -(i+j) phi); read phi from A_01, then check the
  // Appendix-A equalities phi_10 = phi_01 and phi_11 = 2 phi_01 directly
  // (this also resolves the phi_11 / 2 square-root ambiguity).
  const OddVec ax01 = odd_vec(block(mx, 0, 1), 0, tol);
  const double phi = mod_2pi(-rotation_angle(ax00, ax01));
  out.phi = phi;

  const OddVec ax10 = odd_vec(block(mx, 1, 0), 0, tol);
  const OddVec ax11 = odd_vec(block(mx, 1, 1), 0, tol);
  const OddVec want10 = rotate(ax00, -phi);
  const OddVec want11 = rotate(ax00, -2.0 * phi);
  if (std::abs(ax10.x - want10.x) > tol || std::abs(ax10.y - want10.y) > tol ||
      std::abs(ax11.x - want11.x) > tol || std::abs(ax11.y - want11.y) > tol)
    throw DomainError(
        "controlled-phase extraction: phase consistency violated "
        "(phi_11 != 2 phi_10); input is not an FCA of this family");
  return out;
}

// Cell -1 / 0 / +1 single-mode components of a forking image.
struct ForkParts {
  OddVec left, mid, right;
};

ForkParts fork_parts(const GradedOperator& img, double tol) {
  ForkParts p;
  for (const auto& [modes, c] : img.terms()) {
    if (std::abs(c) <= tol) continue;
    if (modes.size() != 1)
      throw DomainError(
          "forking extraction: image is not a sum of single Majorana modes");
    if (std::abs(c.imag()) > tol)
      throw DomainError("forking extraction: complex coefficient");
    const int cell = cell_of_mode(modes[0]);
    OddVec* v = cell == -1  ? &p.left
                : cell == 0 ? &p.mid
                : cell == 1 ? &p.right
                            : nullptr;
    if (v == nullptr)
      throw DomainError("forking extraction: support beyond cells -1..1");
    if (modes[0] & 1) {
      v->y = c.real();
    } else {
      v->x = c.real();
    }
  }
  return p;
}

ExtractedParameters extract_forking(const LocalRule& rule, double tol) {
  const ForkParts px = fork_parts(rule.image_x, 1e-12);
  const ForkParts py = fork_parts(rule.image_y, 1e-12);

  ExtractedParameters out;
  GradedOperator left_image = rule.image_x;   // should live at cell -1
  GradedOperator right_image = rule.image_y;  // should live at cell +1

  const bool in_layout = px.right.norm() <= tol && px.mid.norm() <= tol &&
                         py.left.norm() <= tol && py.mid.norm() <= tol;
  if (!in_layout) {
    // General case (iii): find the domain pair (eta, xi) with T(eta) purely
    // at cell -1 and T(xi) purely at cell +1 (Theorem-3 normal form), and
    // record the cell-local basis change D with T = T' o D.
    auto null_vec = [&](const OddVec& a, const OddVec& b) -> OddVec {
      // u with u1 * a + u2 * b = 0 in R^2; columns a, b.
      OddVec u;
      if (std::abs(a.x) + std::abs(a.y) >= std::abs(b.x) + std::abs(b.y)) {
        // b = k a expected; u = (k, -1) up to normalization.
        const double k = (std::abs(a.x) > std::abs(a.y)) ? b.x / a.x : b.y / a.y;
        u = {k, -1.0};
      } else {
        const double k = (std::abs(b.x) > std::abs(b.y)) ? a.x / b.x : a.y / b.y;
        u = {-1.0, k};
      }
      const double nn = u.norm();
      return {u.x / nn, u.y / nn};
    };
    OddVec u = null_vec(px.right, py.right);  // eta = u1 X + u2 Y
    OddVec v = null_vec(px.left, py.left);    // xi  = v1 X + v2 Y
    // Deterministic output: non-negative leading coefficient.
    if (u.x < 0 || (u.x == 0 && u.y < 0)) u = {-u.x, -u.y};
    if (v.x < 0 || (v.x == 0 && v.y < 0)) v = {-v.x, -v.y};
    if (std::abs(u.x * v.x + u.y * v.y) > tol)
      throw DomainError(
          "forking extraction: no cell-local basis change reaches the "
          "two-edge normal form (rule outside the Theorem-3 family)");

    const GradedOperator t_eta =
        (Complex(u.x, 0) * rule.image_x + Complex(u.y, 0) * rule.image_y)
            .chopped(1e-12);
    const GradedOperator t_xi =
        (Complex(v.x, 0) * rule.image_x + Complex(v.y, 0) * rule.image_y)
            .chopped(1e-12);
    const ForkParts pe = fork_parts(t_eta, 1e-12);
    const ForkParts pxi = fork_parts(t_xi, 1e-12);
    if (pe.right.norm() > tol || pe.mid.norm() > tol ||
        pxi.left.norm() > tol || pxi.mid.norm() > tol)
      throw DomainError(
          "forking extraction: no cell-local basis change reaches the "
          "two-edge normal form (rule outside the Theorem-3 family)");

    // D^{-1}: (X, Y) -> (eta, xi); store D so that T = T' o D.
    const ExtractedParameters dinv = solve_conjugation(u, v, tol);
    const int dn = dinv.n;
    const double dtheta = dn == 1 ? dinv.theta : mod_pi(-dinv.theta);
    out.domain_theta = dtheta;
    out.domain_n = dn;
    out.has_domain_rotation = true;
    left_image = t_eta;
    right_image = t_xi;
  }

  // Built-in layout: image_x = U Y U^dag at cell -1, image_y = U X U^dag at
  // cell +1:
  //   n = 0: left = (sin 2t, cos 2t),   right = (cos 2t, -sin 2t)
  //   n = 1: left = (-sin 2t, -cos 2t), right = (cos 2t, -sin 2t)
  const OddVec l = odd_vec(left_image, -1, tol);
  const OddVec r = odd_vec(right_image, 1, tol);
  auto check = [&](int n) -> bool {
    const double s = n == 0 ? l.x : -l.x;
    const double c = n == 0 ? l.y : -l.y;
    return std::abs(r.x - c) <= tol && std::abs(r.y + s) <= tol &&
           std::abs(s * s + c * c - 1.0) <= 1e-6;
  };
  if (check(0)) {
    out.n = 0;
    out.theta = mod_pi(0.5 * std::atan2(l.x, l.y));
  } else if (check(1)) {
    out.n = 1;
    out.theta = mod_pi(0.5 * std::atan2(-l.x, -l.y));
  } else {
    throw DomainError("forking extraction: edge generators inconsistent");
  }
  return out;
}

}  // namespace

EdgeSupports compute_edge_supports(const LocalRule& rule, double tol) {
  const ValidityReport report = validate_local_rule(rule);
  if (!report.valid())
    throw DomainError("compute_edge_supports: invalid rule:\n" + report.str());
  if (!rule.nbhd.nearest_neighbour())
    throw DomainError("compute_edge_supports: neighbourhood exceeds {-1,0,1}");
  const AlgebraBasis image = algebra_closure({rule.image_x, rule.image_y}, tol);
  EdgeSupports out;
  out.e_left = support_algebra(image.elements, {-1}, tol);
  out.e_center = support_algebra(image.elements, {0}, tol);
  out.e_right = support_algebra(image.elements, {1}, tol);
  return out;
}

IndexValue Classification::index() const {
  int log2 = 0;
  for (const Peel& p : peeled) log2 += (p.majorana ? -1 : -2) * p.direction;
  return IndexValue::from_log2(log2);
}

std::string Classification::str() const {
  std::ostringstream oss;
  for (const Peel& p : peeled) {
    oss << (p.majorana ? "majorana-shift-composed(" : "shift-composed(")
        << (p.direction > 0 ? "+" : "-") << (p.right_side ? ", right, " : ", ");
  }
  switch (family) {
    case Family::LocalConjugation:
      oss << "local-conjugation(theta=" << theta << ", n=" << n << ")";
      break;
    case Family::ControlledPhase:
      oss << "controlled-phase(phi=" << phi << ", theta=" << theta
          << ", n=" << n << ")";
      break;
    case Family::Forking:
      oss << "forking(theta=" << theta << ", n=" << n;
      if (has_domain_rotation)
        oss << ", domain theta=" << domain_theta << ", n=" << domain_n;
      oss << ")";
      break;
  }
  for (std::size_t i = 0; i < peeled.size(); ++i) oss << ")";
  return oss.str();
}

ExtractedParameters extract_parameters(const LocalRule& rule,
                                       Classification::Family family,
                                       double tol) {
  switch (family) {
    case Classification::Family::LocalConjugation:
      return extract_local_conjugation(rule, tol);
    case Classification::Family::ControlledPhase:
      return extract_controlled_phase(rule, tol);
    case Classification::Family::Forking:
      return extract_forking(rule, tol);
  }
  throw Error("extract_parameters: unreachable");
}

Classification classify(const LocalRule& rule, double tol) {
  return classify(Automaton::custom(rule), tol);
}

Classification classify(const Automaton& input, double tol) {
  {
    const ValidityReport report = validate_local_rule(input.effective_rule());
    if (!report.valid())
      throw DomainError("classify: invalid rule:\n" + report.str());
  }

  Classification cls;
  Automaton aut = input;
  IndexValue idx = compute_index(aut);

  // Peel shift factors by index: 2^{+-1} peels a shift, 2^{+-1/2} a Majorana
  // shift; at most one Majorana peel since the residual exponent is then
  // integral.
  while (idx.log2_num != 0) {
    Classification::Peel peel;
    Automaton inverse_factor = Automaton::identity();
    if (idx.log2_num <= -2) {
      peel = {false, +1, false};
      inverse_factor = Automaton::shift(-1);
    } else if (idx.log2_num >= 2) {
      peel = {false, -1, false};
      inverse_factor = Automaton::shift(+1);
    } else if (idx.log2_num == -1) {
      peel = {true, +1, false};
      inverse_factor = Automaton::majorana_shift(+1, true);
    } else {
      peel = {true, -1, false};
      inverse_factor = Automaton::majorana_shift(-1, true);
    }
    aut = compose(inverse_factor, aut);  // T = peel o S  =>  S = peel^{-1} o T
    cls.peeled.push_back(peel);
    idx = compute_index(aut);
  }

  auto classify_base = [&](const LocalRule& r) -> Classification {
    if (!r.nbhd.nearest_neighbour())
      throw DomainError(
          "classify: unit-index residual is not nearest-neighbour");
    const EdgeSupports edges = compute_edge_supports(r);
    const int dl = edges.e_left.dimension();
    const int dr = edges.e_right.dimension();
    const int odd_l = edges.e_left.parity_dimension(1);
    const int odd_r = edges.e_right.parity_dimension(1);
    Classification base = cls;
    if (dl == 1 && dr == 1) {
      base.family = Classification::Family::LocalConjugation;
    } else if (dl == 2 && dr == 2 && odd_l == 0 && odd_r == 0) {
      base.family = Classification::Family::ControlledPhase;
    } else if (dl == 2 && dr == 2 && odd_l == 1 && odd_r == 1) {
      base.family = Classification::Family::Forking;
    } else {
      throw DomainError("classify: unclassifiable edge-support pattern (dims " +
                        std::to_string(dl) + "/" + std::to_string(dr) + ")");
    }
    const ExtractedParameters p = extract_parameters(r, base.family, tol);
    base.phi = p.phi;
    base.theta = p.theta;
    base.n = p.n;
    base.domain_theta = p.domain_theta;
    base.domain_n = p.domain_n;
    base.has_domain_rotation = p.has_domain_rotation;
    return base;
  };

  try {
    return classify_base(aut.effective_rule());
  } catch (const DomainError&) {
    // A Majorana factor composed on the other side leaves a different
    // residual: retry with T = S o peel, i.e. S = T o peel^{-1}.
    if (cls.peeled.size() == 1 && cls.peeled.front().majorana) {
      Classification::Peel peel = cls.peeled.front();
      peel.right_side = true;
      const Automaton inverse_factor =
          Automaton::majorana_shift(peel.direction, true);
      const Automaton right_residual = compose(input, inverse_factor);
      cls.peeled.front() = peel;
      return classify_base(right_residual.effective_rule());
    }
    throw;
  }
}

Automaton reconstruct(const Classification& cls) {
  Automaton base = Automaton::identity();
  switch (cls.family) {
    case Classification::Family::LocalConjugation:
      base = Automaton::conjugation(cls.theta, cls.n);
      break;
    case Classification::Family::ControlledPhase:
      base = Automaton::controlled_phase(cls.phi, cls.theta, cls.n);
      break;
    case Classification::Family::Forking:
      base = Automaton::forking(cls.theta, cls.n);
      if (cls.has_domain_rotation)
        base = compose(base,
                       Automaton::conjugation(cls.domain_theta, cls.domain_n));
      break;
  }
  Automaton out = base;
  for (auto it = cls.peeled.rbegin(); it != cls.peeled.rend(); ++it) {
    const Automaton factor = it->majorana
                                 ? Automaton::majorana_shift(it->direction)
                                 : Automaton::shift(it->direction);
    out = it->right_side ? compose(out, factor) : compose(factor, out);
  }
  return out;
}

}  // namespace fca
