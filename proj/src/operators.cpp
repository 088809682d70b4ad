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

#include "fca/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fca {

std::string CellWindow::str() const {
  std::ostringstream oss;
  oss << "[" << lo << ".." << hi << "]";
  return oss.str();
}

MonomialProduct multiply_modes(const Modes& a, const Modes& b) {
  MonomialProduct out;
  out.sign = 1;
  out.modes.reserve(a.size() + b.size());

  std::size_t i = 0;
  std::size_t j = 0;
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  while (i < na && j < nb) {
    if (a[i] < b[j]) {
      out.modes.push_back(a[i]);
      ++i;
    } else if (a[i] > b[j]) {
      // b[j] hops past the remaining na - i modes of a.
      if ((na - i) % 2 != 0) out.sign = -out.sign;
      out.modes.push_back(b[j]);
      ++j;
    } else {
      // Equal modes cancel (xi^2 = I); b[j] first hops past na - i - 1 modes.
      if ((na - i - 1) % 2 != 0) out.sign = -out.sign;
      ++i;
      ++j;
    }
  }
  while (i < na) out.modes.push_back(a[i++]);
  while (j < nb) out.modes.push_back(b[j++]);
  return out;
}

int split_sign(const Modes& modes, const std::set<Mode>& first) {
  // Count inversions between the two groups in the stable partition.
  int swaps = 0;
  int later_seen = 0;
  for (Mode m : modes) {
    if (first.count(m)) {
      swaps += later_seen;
    } else {
      ++later_seen;
    }
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

GradedOperator GradedOperator::identity() {
  GradedOperator op;
  op.terms_[{}] = Complex(1.0, 0.0);
  return op;
}

GradedOperator GradedOperator::monomial(Modes modes, Complex coeff) {
  for (std::size_t i = 1; i < modes.size(); ++i) {
    if (modes[i - 1] >= modes[i])
      throw InputError("monomial: modes must be strictly increasing");
  }
  GradedOperator op;
  if (coeff != Complex(0.0, 0.0)) op.terms_[std::move(modes)] = coeff;
  return op;
}

GradedOperator GradedOperator::mode(Mode m) { return monomial({m}, 1.0); }

GradedOperator GradedOperator::x(int cell) {
  return monomial({static_cast<Mode>(2 * cell)}, 1.0);
}

GradedOperator GradedOperator::y(int cell) {
  return monomial({static_cast<Mode>(2 * cell + 1)}, 1.0);
}

GradedOperator GradedOperator::z(int cell) {
  // Z = i Y X = -i xi_{2c} xi_{2c+1}; in the occupation basis diag(1,-1).
  return monomial({static_cast<Mode>(2 * cell), static_cast<Mode>(2 * cell + 1)},
                  Complex(0.0, -1.0));
}

GradedOperator GradedOperator::proj(int cell, int occupation) {
  GradedOperator p = identity();
  p *= 0.5;
  GradedOperator zz = z(cell);
  zz *= (occupation == 0) ? 0.5 : -0.5;
  p += zz;
  return p;
}

bool GradedOperator::is_zero(double tol) const {
  for (const auto& [modes, c] : terms_) {
    if (std::abs(c) > tol) return false;
  }
  return true;
}

Complex GradedOperator::coeff(const Modes& modes) const {
  auto it = terms_.find(modes);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

GradedOperator& GradedOperator::add_term(const Modes& modes, Complex coeff) {
  auto it = terms_.find(modes);
  if (it == terms_.end()) {
    if (coeff != Complex(0.0, 0.0)) terms_[modes] = coeff;
  } else {
    it->second += coeff;
    if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
  }
  return *this;
}

GradedOperator GradedOperator::operator-() const {
  GradedOperator out = *this;
  for (auto& [modes, c] : out.terms_) c = -c;
  return out;
}

GradedOperator& GradedOperator::operator+=(const GradedOperator& other) {
  for (const auto& [modes, c] : other.terms_) add_term(modes, c);
  return *this;
}

GradedOperator& GradedOperator::operator-=(const GradedOperator& other) {
  for (const auto& [modes, c] : other.terms_) add_term(modes, -c);
  return *this;
}

GradedOperator& GradedOperator::operator*=(Complex scale) {
  if (scale == Complex(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [modes, c] : terms_) c *= scale;
  return *this;
}

GradedOperator GradedOperator::adjoint() const {
  GradedOperator out;
  for (const auto& [modes, c] : terms_) {
    // Reversing a k-mode product costs k(k-1)/2 transpositions.
    const std::size_t k = modes.size();
    const bool flip = ((k * (k - 1)) / 2) % 2 != 0;
    Complex cc = std::conj(c);
    out.add_term(modes, flip ? -cc : cc);
  }
  return out;
}

GradedOperator GradedOperator::translated(int cells) const {
  GradedOperator out;
  const Mode shift = static_cast<Mode>(2 * cells);
  for (const auto& [modes, c] : terms_) {
    Modes shifted = modes;
    for (Mode& m : shifted) m += shift;
    out.terms_[std::move(shifted)] = c;
  }
  return out;
}

GradedOperator GradedOperator::relabel_cells(
    const std::map<int, int>& cell_map) const {
  GradedOperator out;
  for (const auto& [modes, c] : terms_) {
    Modes relabeled;
    relabeled.reserve(modes.size());
    for (Mode m : modes) {
      const int cell = cell_of_mode(m);
      auto it = cell_map.find(cell);
      const int target = it == cell_map.end() ? cell : it->second;
      relabeled.push_back(static_cast<Mode>(2 * target + (m & 1)));
    }
    // Re-sort, tracking transposition parity.
    int sign = 1;
    for (std::size_t i = 1; i < relabeled.size(); ++i) {
      Mode v = relabeled[i];
      std::size_t j = i;
      while (j > 0 && relabeled[j - 1] > v) {
        relabeled[j] = relabeled[j - 1];
        sign = -sign;
        --j;
      }
      relabeled[j] = v;
    }
    for (std::size_t i = 1; i < relabeled.size(); ++i) {
      if (relabeled[i - 1] == relabeled[i])
        throw InputError("relabel_cells: cell map not injective on support");
    }
    out.add_term(relabeled, static_cast<double>(sign) * c);
  }
  return out;
}

GradedOperator GradedOperator::chopped(double eps) const {
  GradedOperator out;
  for (const auto& [modes, c] : terms_) {
    if (std::abs(c) >= eps) out.terms_[modes] = c;
  }
  return out;
}

bool GradedOperator::is_homogeneous(double tol) const {
  int seen = -1;
  for (const auto& [modes, c] : terms_) {
    if (std::abs(c) <= tol) continue;
    const int g = static_cast<int>(modes.size() % 2);
    if (seen == -1) seen = g;
    if (g != seen) return false;
  }
  return true;
}

int GradedOperator::grade(double tol) const {
  int seen = -1;
  for (const auto& [modes, c] : terms_) {
    if (std::abs(c) <= tol) continue;
    const int g = static_cast<int>(modes.size() % 2);
    if (seen == -1) seen = g;
    if (g != seen)
      throw DomainError("grade: operator is not parity-homogeneous");
  }
  return seen == -1 ? 0 : seen;
}

GradedOperator GradedOperator::parity_part(int g) const {
  GradedOperator out;
  for (const auto& [modes, c] : terms_) {
    if (static_cast<int>(modes.size() % 2) == g) out.terms_[modes] = c;
  }
  return out;
}

std::set<int> GradedOperator::support_cells(double tol) const {
  std::set<int> cells;
  for (const auto& [modes, c] : terms_) {
    if (std::abs(c) <= tol) continue;
    for (Mode m : modes) cells.insert(cell_of_mode(m));
  }
  return cells;
}

bool GradedOperator::supported_within(const CellWindow& w, double tol) const {
  for (int c : support_cells(tol)) {
    if (!w.contains_cell(c)) return false;
  }
  return true;
}

double GradedOperator::norm() const {
  double s = 0.0;
  for (const auto& [modes, c] : terms_) s += std::norm(c);
  return std::sqrt(s);
}

bool GradedOperator::is_self_adjoint(double tol) const {
  return approx_equal(*this, adjoint(), tol);
}

std::string GradedOperator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream oss;
  bool first = true;
  for (const auto& [modes, c] : terms_) {
    if (!first) oss << " + ";
    first = false;
    oss << "(" << c.real() << (c.imag() < 0 ? "-" : "+")
        << std::abs(c.imag()) << "i)";
    if (modes.empty()) {
      oss << " I";
    } else {
      for (Mode m : modes) oss << " xi_" << m;
    }
  }
  return oss.str();
}

GradedOperator operator+(GradedOperator a, const GradedOperator& b) {
  a += b;
  return a;
}

GradedOperator operator-(GradedOperator a, const GradedOperator& b) {
  a -= b;
  return a;
}

GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
  GradedOperator out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      MonomialProduct p = multiply_modes(ma, mb);
      out.add_term(p.modes, static_cast<double>(p.sign) * ca * cb);
    }
  }
  return out;
}

GradedOperator operator*(Complex scale, GradedOperator a) {
  a *= scale;
  return a;
}

GradedOperator operator*(GradedOperator a, Complex scale) {
  a *= scale;
  return a;
}

Complex hs_inner(const GradedOperator& a, const GradedOperator& b) {
  // Iterate over the smaller term map.
  const GradedOperator& small = a.num_terms() <= b.num_terms() ? a : b;
  const GradedOperator& large = a.num_terms() <= b.num_terms() ? b : a;
  const bool swapped = &small == &b;
  Complex acc(0.0, 0.0);
  for (const auto& [modes, c] : small.terms()) {
    const Complex other = large.coeff(modes);
    if (other == Complex(0.0, 0.0)) continue;
    acc += swapped ? std::conj(other) * c : std::conj(c) * other;
  }
  return acc;
}

double max_coeff_diff(const GradedOperator& a, const GradedOperator& b) {
  double worst = 0.0;
  for (const auto& [modes, c] : a.terms())
    worst = std::max(worst, std::abs(c - b.coeff(modes)));
  for (const auto& [modes, c] : b.terms())
    worst = std::max(worst, std::abs(c - a.coeff(modes)));
  return worst;
}

bool approx_equal(const GradedOperator& a, const GradedOperator& b,
                  double tol) {
  return max_coeff_diff(a, b) <= tol;
}

GradedOperator graded_commutator(const GradedOperator& a,
                                 const GradedOperator& b, double tol) {
  const int ga = a.grade(tol);
  const int gb = b.grade(tol);
  GradedOperator out = a * b;
  GradedOperator ba = b * a;
  if (ga == 1 && gb == 1) {
    out += ba;
  } else {
    out -= ba;
  }
  return out;
}

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b) {
  return a * b - b * a;
}

GradedOperator anticommutator(const GradedOperator& a,
                              const GradedOperator& b) {
  return a * b + b * a;
}

GradedOperator single_mode_unitary(double theta, int n, int cell) {
  if (n != 0 && n != 1) throw InputError("single_mode_unitary: n must be 0 or 1");
  GradedOperator u = GradedOperator::identity();
  u *= Complex(std::cos(theta), 0.0);
  GradedOperator zz = GradedOperator::z(cell);
  zz *= Complex(0.0, std::sin(theta));
  u += zz;
  if (n == 1) u = u * GradedOperator::x(cell);
  return u;
}

}  // namespace fca
