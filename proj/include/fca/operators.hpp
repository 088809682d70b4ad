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

#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fca/errors.hpp"

namespace fca {

using Complex = std::complex<double>;

// Majorana mode index.  Modes 2x and 2x+1 belong to cell x, so a cell carries
// one Fermionic mode (two Majorana modes).
using Mode = std::int32_t;
using Modes = std::vector<Mode>;  // strictly increasing, no repeats

inline int cell_of_mode(Mode m) { return static_cast<int>(m >> 1); }

// Contiguous cell interval [lo, hi] used by the dense oracle and as the
// locality bookkeeping region.  Windows are open: no wrap-around.
struct CellWindow {
  int lo = 0;
  int hi = 0;

  CellWindow() = default;
  CellWindow(int lo_, int hi_) : lo(lo_), hi(hi_) {
    if (lo > hi) throw InputError("CellWindow: lo > hi");
  }

  int num_cells() const { return hi - lo + 1; }
  bool contains_cell(int c) const { return c >= lo && c <= hi; }
  bool contains(const CellWindow& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  std::string str() const;
};

// Product of two canonical Majorana strings: merged mode list plus the sign
// accumulated from transpositions and xi^2 = I cancellations.
struct MonomialProduct {
  Modes modes;
  int sign = 1;
};

MonomialProduct multiply_modes(const Modes& a, const Modes& b);

// Sign picked up when stably reordering `modes` (ascending) so that the modes
// contained in `first` come first, both groups keeping their relative order.
int split_sign(const Modes& modes, const std::set<Mode>& first);

// Complex linear combination of canonical Majorana-string monomials.  The
// canonical form is unique: strictly increasing mode lists, no zero
// coefficients, so equal operators have identical term maps.
class GradedOperator {
 public:
  GradedOperator() = default;

  static GradedOperator zero() { return GradedOperator(); }
  static GradedOperator identity();
  static GradedOperator monomial(Modes modes, Complex coeff);
  static GradedOperator mode(Mode m);  // single Majorana generator
  static GradedOperator x(int cell);   // xi_{2c}
  static GradedOperator y(int cell);   // xi_{2c+1}
  static GradedOperator z(int cell);   // i Y X = -i xi_{2c} xi_{2c+1}
  static GradedOperator proj(int cell, int occupation);  // (I +- Z)/2

  const std::map<Modes, Complex>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero(double tol = 0.0) const;
  Complex coeff(const Modes& modes) const;

  // Adds coeff * monomial(modes), keeping the form canonical.  `modes` must
  // already be strictly increasing.
  GradedOperator& add_term(const Modes& modes, Complex coeff);

  GradedOperator operator-() const;
  GradedOperator& operator+=(const GradedOperator& other);
  GradedOperator& operator-=(const GradedOperator& other);
  GradedOperator& operator*=(Complex scale);

  GradedOperator adjoint() const;
  GradedOperator translated(int cells) const;

  // Relabels cells through an arbitrary map (modes keep their intra-cell
  // parity bit).  The map must be injective on the support.
  GradedOperator relabel_cells(const std::map<int, int>& cell_map) const;

  // Drops coefficients with magnitude below eps.  Numeric pipelines use this
  // at their boundaries; exact integer-coefficient paths never need it.
  GradedOperator chopped(double eps) const;

  // Grading.  Terms with |coeff| <= tol are ignored.
  bool is_homogeneous(double tol = 0.0) const;
  int grade(double tol = 0.0) const;  // throws DomainError when inhomogeneous
  GradedOperator parity_part(int g) const;

  std::set<int> support_cells(double tol = 0.0) const;
  bool supported_within(const CellWindow& w, double tol = 0.0) const;

  double norm() const;
  bool is_self_adjoint(double tol) const;

  std::string str() const;

 private:
  std::map<Modes, Complex> terms_;
};

GradedOperator operator+(GradedOperator a, const GradedOperator& b);
GradedOperator operator-(GradedOperator a, const GradedOperator& b);
GradedOperator operator*(const GradedOperator& a, const GradedOperator& b);
GradedOperator operator*(Complex scale, GradedOperator a);
GradedOperator operator*(GradedOperator a, Complex scale);

// Normalized trace inner product <a,b> = tr(a^dag b) / 2^n.  Distinct
// canonical monomials are orthonormal, so this is the coefficient dot
// product and needs no window.
Complex hs_inner(const GradedOperator& a, const GradedOperator& b);

double max_coeff_diff(const GradedOperator& a, const GradedOperator& b);
bool approx_equal(const GradedOperator& a, const GradedOperator& b,
                  double tol);

// O1 O2 - (-1)^{g1 g2} O2 O1: anticommutator when both arguments are odd,
// commutator otherwise.  Arguments must be parity-homogeneous.
GradedOperator graded_commutator(const GradedOperator& a,
                                 const GradedOperator& b, double tol = 0.0);

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b);
GradedOperator anticommutator(const GradedOperator& a,
                              const GradedOperator& b);

// exp(i theta Z) X^n, the single-mode unitary group U(1) x Z_2.
GradedOperator single_mode_unitary(double theta, int n, int cell = 0);

}  // namespace fca
