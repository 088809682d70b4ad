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

#include "fca/rule.hpp"

#include <algorithm>
#include <sstream>

namespace fca {

Neighbourhood::Neighbourhood(std::vector<int> offs) : offsets(std::move(offs)) {
  if (offsets.empty()) throw InputError("Neighbourhood: must be non-empty");
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
}

bool Neighbourhood::contains(int x) const {
  return std::binary_search(offsets.begin(), offsets.end(), x);
}

Neighbourhood operator+(const Neighbourhood& a, const Neighbourhood& b) {
  std::vector<int> sum;
  sum.reserve(a.offsets.size() * b.offsets.size());
  for (int x : a.offsets)
    for (int y : b.offsets) sum.push_back(x + y);
  return Neighbourhood(std::move(sum));
}

std::string Neighbourhood::str() const {
  std::ostringstream oss;
  oss << "{";
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (i) oss << ",";
    oss << offsets[i];
  }
  oss << "}";
  return oss.str();
}

std::string ValidityReport::str() const {
  if (valid()) return "valid";
  std::ostringstream oss;
  for (const auto& v : violations)
    oss << v.condition << ": " << v.detail << "\n";
  return oss.str();
}

ValidityReport validate_local_rule(const LocalRule& rule, double tol) {
  ValidityReport report;
  const GradedOperator& tx = rule.image_x;
  const GradedOperator& ty = rule.image_y;

  bool parity_ok = true;
  auto check_odd = [&](const GradedOperator& img, const char* name) {
    if (!img.is_homogeneous(tol) || img.is_zero(tol) ||
        img.parity_part(1).is_zero(tol)) {
      report.violations.push_back(
          {"odd parity", std::string(name) + " is not an odd operator"});
      parity_ok = false;
    }
  };
  check_odd(tx, "T(X0)");
  check_odd(ty, "T(Y0)");

  if (!tx.is_self_adjoint(tol))
    report.violations.push_back({"CAR preservation", "T(X0) not self-adjoint"});
  if (!ty.is_self_adjoint(tol))
    report.violations.push_back({"CAR preservation", "T(Y0) not self-adjoint"});

  const GradedOperator id = GradedOperator::identity();
  if (!approx_equal(tx * tx, id, tol))
    report.violations.push_back({"CAR preservation", "T(X0)^2 != I"});
  if (!approx_equal(ty * ty, id, tol))
    report.violations.push_back({"CAR preservation", "T(Y0)^2 != I"});
  if (!approx_equal(anticommutator(tx, ty), GradedOperator::zero(), tol))
    report.violations.push_back({"CAR preservation", "{T(X0), T(Y0)} != 0"});

  for (const GradedOperator* img : {&tx, &ty}) {
    for (int c : img->support_cells(tol)) {
      if (!rule.nbhd.contains(c)) {
        report.violations.push_back(
            {"locality", "image supported on cell " + std::to_string(c) +
                             " outside neighbourhood " + rule.nbhd.str()});
        break;
      }
    }
  }

  if (!parity_ok) return report;  // graded commutators need homogeneity

  // Theorem-2 overlap condition: x != 0 with N and N + x intersecting.
  const int spread = rule.nbhd.max() - rule.nbhd.min();
  const char* names[2] = {"T(X0)", "T(Y0)"};
  const GradedOperator* images[2] = {&tx, &ty};
  for (int x = -spread; x <= spread; ++x) {
    if (x == 0) continue;
    bool overlaps = false;
    for (int o : rule.nbhd.offsets) {
      if (rule.nbhd.contains(o - x)) {
        overlaps = true;
        break;
      }
    }
    if (!overlaps) continue;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const GradedOperator shifted = images[j]->translated(x);
        const GradedOperator gc = graded_commutator(*images[i], shifted, tol);
        if (!gc.is_zero(tol)) {
          std::ostringstream oss;
          oss << "[[" << names[i] << ", tau_" << x << " " << names[j]
              << " tau_" << -x << "]] != 0";
          report.violations.push_back({"translate overlap", oss.str()});
        }
      }
    }
  }
  return report;
}

}  // namespace fca
