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

#include "fca/jw.hpp"

#include <algorithm>
#include <cmath>

namespace fca {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(c, r) = std::conj(at(r, c));
  return out;
}

CMatrix CMatrix::operator+(const CMatrix& other) const {
  CMatrix out(n);
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] + other.a[i];
  return out;
}

CMatrix CMatrix::operator-(const CMatrix& other) const {
  CMatrix out(n);
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] - other.a[i];
  return out;
}

CMatrix CMatrix::scaled(Complex s) const {
  CMatrix out(n);
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] * s;
  return out;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : a) s += std::norm(v);
  return std::sqrt(s);
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - other.a[i]));
  return worst;
}

bool CMatrix::is_identity(double tol) const {
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Complex want = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      if (std::abs(at(r, c) - want) > tol) return false;
    }
  return true;
}

CMatrix matmul_serial(const CMatrix& a, const CMatrix& b) {
  const int n = a.n;
  CMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      const Complex* brow = &b.a[static_cast<std::size_t>(k) * n];
      Complex* orow = &out.a[static_cast<std::size_t>(i) * n];
      for (int j = 0; j < n; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  const int n = a.n;
  CMatrix out(n);
#pragma omp parallel for schedule(static) if (n >= 64)
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      const Complex* brow = &b.a[static_cast<std::size_t>(k) * n];
      Complex* orow = &out.a[static_cast<std::size_t>(i) * n];
      for (int j = 0; j < n; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

namespace {

// Applies one Majorana generator to basis state `state`, MSB-first cell
// order.  Returns the new state and multiplies `phase` in place.
inline unsigned apply_mode(Mode m, int lo, int ncells, unsigned state,
                           Complex& phase) {
  const int cell = cell_of_mode(m) - lo;
  const int bitpos = ncells - 1 - cell;
  // Z string over cells left of `cell`.
  int zcount = 0;
  for (int j = 0; j < cell; ++j) {
    if ((state >> (ncells - 1 - j)) & 1u) ++zcount;
  }
  if (zcount % 2 != 0) phase = -phase;
  const bool occupied = (state >> bitpos) & 1u;
  if (m & 1) {
    // sigma_y: |0> -> i|1>, |1> -> -i|0>.
    phase *= occupied ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
  }
  return state ^ (1u << bitpos);
}

}  // namespace

CMatrix jw_matrix(const GradedOperator& op, const CellWindow& w) {
  if (!op.supported_within(w))
    throw DomainError("jw_matrix: operator support outside window " + w.str());
  const int ncells = w.num_cells();
  const int dim = 1 << ncells;
  CMatrix out(dim);
  for (const auto& [modes, coeff] : op.terms()) {
    const Complex c = coeff;
#pragma omp parallel for schedule(static) if (dim >= 256)
    for (int b = 0; b < dim; ++b) {
      unsigned state = static_cast<unsigned>(b);
      Complex phase(1.0, 0.0);
      // Rightmost factor acts first on the ket.
      for (auto it = modes.rbegin(); it != modes.rend(); ++it)
        state = apply_mode(*it, w.lo, ncells, state, phase);
      out.a[static_cast<std::size_t>(state) * dim + b] += c * phase;
    }
  }
  return out;
}

GradedOperator operator_from_matrix(const CMatrix& m, const CellWindow& w,
                                    double eps) {
  const int ncells = w.num_cells();
  const int dim = 1 << ncells;
  if (m.n != dim)
    throw InputError("operator_from_matrix: matrix size does not match window");
  const int nmodes = 2 * ncells;
  GradedOperator out;
  for (unsigned mask = 0; mask < (1u << nmodes); ++mask) {
    Modes modes;
    for (int k = 0; k < nmodes; ++k) {
      if ((mask >> k) & 1u) modes.push_back(static_cast<Mode>(2 * w.lo + k));
    }
    // coeff = tr(jw(mu)^dag M) / dim, using that jw(mu) maps each basis
    // column to a single phased basis state.
    Complex acc(0.0, 0.0);
    for (int b = 0; b < dim; ++b) {
      unsigned state = static_cast<unsigned>(b);
      Complex phase(1.0, 0.0);
      for (auto it = modes.rbegin(); it != modes.rend(); ++it)
        state = apply_mode(*it, w.lo, ncells, state, phase);
      acc += std::conj(phase) * m.at(static_cast<int>(state), b);
    }
    acc /= static_cast<double>(dim);
    if (std::abs(acc) >= eps) out.add_term(modes, acc);
  }
  return out;
}

CMatrix matrix_exp(const CMatrix& m) {
  // Scale so the max-row-sum norm is below 1/2, series, then square back.
  double norm = 0.0;
  for (int r = 0; r < m.n; ++r) {
    double row = 0.0;
    for (int c = 0; c < m.n; ++c) row += std::abs(m.at(r, c));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  CMatrix scaled = m.scaled(scale);
  CMatrix result = CMatrix::identity(m.n);
  CMatrix term = CMatrix::identity(m.n);
  for (int k = 1; k <= 24; ++k) {
    term = matmul(term, scaled).scaled(1.0 / static_cast<double>(k));
    result = result + term;
  }
  for (int s = 0; s < squarings; ++s) result = matmul(result, result);
  return result;
}

bool is_unitary(const GradedOperator& op, double tol) {
  const std::set<int> cells = op.support_cells();
  const int lo = cells.empty() ? 0 : *cells.begin();
  const int hi = cells.empty() ? 0 : *cells.rbegin();
  const CellWindow w(lo, hi);
  const CMatrix u = jw_matrix(op, w);
  return matmul(u, u.adjoint()).is_identity(tol);
}

}  // namespace fca
