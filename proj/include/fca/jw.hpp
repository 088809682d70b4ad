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

#include <vector>

#include "fca/operators.hpp"

namespace fca {

// Dense complex square matrix, row-major.  Kept deliberately small: the
// oracle never needs more than a handful of cells.
struct CMatrix {
  int n = 0;
  std::vector<Complex> a;

  CMatrix() = default;
  explicit CMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}

  Complex& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  const Complex& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * n + c];
  }

  static CMatrix identity(int n);
  CMatrix adjoint() const;
  CMatrix operator+(const CMatrix& other) const;
  CMatrix operator-(const CMatrix& other) const;
  CMatrix scaled(Complex s) const;
  double frobenius_norm() const;
  double max_abs_diff(const CMatrix& other) const;
  bool is_identity(double tol) const;
};

// Serial reference kernel, kept for testing the parallel path.
CMatrix matmul_serial(const CMatrix& a, const CMatrix& b);

// OpenMP kernel; falls back to the serial loop when built without OpenMP.
CMatrix matmul(const CMatrix& a, const CMatrix& b);

// Jordan-Wigner representation of `op` on the window:
//   xi_{2x}   -> (prod_{y<x} sigma_z) sigma_x,
//   xi_{2x+1} -> (prod_{y<x} sigma_z) sigma_y,
// extended linearly over terms.  Cell `lo` is the most significant qubit.
// Throws DomainError when support(op) is not inside the window.
CMatrix jw_matrix(const GradedOperator& op, const CellWindow& w);

// Inverse of jw_matrix: expands M over the canonical monomial basis of the
// window via the normalized trace inner product, dropping coefficients with
// magnitude below eps.
GradedOperator operator_from_matrix(const CMatrix& m, const CellWindow& w,
                                    double eps = 1e-12);

// exp(M) by scaling-and-squaring on a truncated series.  Intended for the
// few-cell unitaries sampled in tests.
CMatrix matrix_exp(const CMatrix& m);

// Unitarity of op on a window that contains its support, via the oracle.
bool is_unitary(const GradedOperator& op, double tol);

}  // namespace fca
