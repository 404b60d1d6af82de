// Copyright 2026 The CWL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CWL_ISOMETRIES_HPP
#define CWL_ISOMETRIES_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "cwl/correlation_space.hpp"
#include "cwl/filter_bank.hpp"

namespace cwl {

/// Compressions V_j* of the adjoint isometries to the correlation space K:
/// V_j* e_n = sum_{m in H} conj(a_{n - N m}^(j)) e_m.  In the fixed basis
/// order V_0* is the slant-Toeplitz matrix with entry (r, c) = conj(a_{N r - c}).
struct IsometrySystem {
  std::vector<Eigen::MatrixXcd> v_star;  // one per subband row
  CorrelationSpace space;
  int scale = 2;
  int genus = 1;

  int dim() const { return space.dim(); }
  Eigen::MatrixXcd v(int i) const { return v_star[i].adjoint(); }

  /// || sum_i V_i V_i* - I ||_2 (completeness of the compressed system).
  double completeness_residual() const {
    const int n = dim();
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& Vs : v_star) S += Vs.adjoint() * Vs;
    return (S - Eigen::MatrixXcd::Identity(n, n)).jacobiSvd().singularValues()(0);
  }
};

inline IsometrySystem build_V(const FilterBank& bank, const CorrelationSpace& space,
                              double validate_tol = 1e-9) {
  if (space.dim() == 0)
    throw std::invalid_argument("build_V: empty correlation space");
  const ValidationReport rep = validate(bank);
  if (rep.max_residual() > validate_tol)
    throw std::invalid_argument("build_V: bank fails validation");
  const int N = bank.scale;
  const int n = space.dim();
  IsometrySystem sys;
  sys.space = space;
  sys.scale = N;
  sys.genus = bank.genus;
  sys.v_star.reserve(bank.rows.size());
  for (const auto& row : bank.rows) {
    Eigen::MatrixXcd M(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        M(r, c) = std::conj(coeff_at(row, space.exponents[c] - N * space.exponents[r]));
    sys.v_star.push_back(std::move(M));
  }
  return sys;
}

inline IsometrySystem build_V(const FilterBank& bank) {
  return build_V(bank, compute_H(bank));
}

/// Whether span{e_{-2d+2}, ..., e_{-1}} is invariant under every V_i*.
/// Returns nullopt (not applicable) when the system carries a dead basis
/// direction, i.e. some row is zero in every V_i* (zero-padded banks whose
/// genuine genus is smaller).
inline std::optional<bool> k0_invariance_check(const IsometrySystem& sys,
                                               double tol = 1e-12) {
  if (sys.genus < 2)
    throw std::invalid_argument("k0_invariance_check: requires genus >= 2");
  for (int r = 0; r < sys.dim(); ++r) {
    double rowsum = 0.0;
    for (const auto& Vs : sys.v_star) rowsum += Vs.row(r).squaredNorm();
    if (rowsum < 1e-12) return std::nullopt;
  }
  const int n = sys.dim();
  // K0 drops the first and last basis vectors (e_0 and e_{-2d+1}).
  for (const auto& Vs : sys.v_star)
    for (int c = 1; c + 1 < n; ++c) {
      if (std::abs(Vs(0, c)) > tol) return false;
      if (std::abs(Vs(n - 1, c)) > tol) return false;
    }
  return true;
}

}  // namespace cwl

#endif  // CWL_ISOMETRIES_HPP
