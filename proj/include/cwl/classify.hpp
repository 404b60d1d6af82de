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

#ifndef CWL_CLASSIFY_HPP
#define CWL_CLASSIFY_HPP

#include <Eigen/Dense>
#include <optional>
#include <random>
#include <vector>

#include "cwl/transfer.hpp"

namespace cwl {

/// Decomposition data of the representation attached to a filter bank.
/// num_irreducible_summands and uhf_summands are reported only while the
/// fixed-point algebra is forced abelian (dimension <= 3); otherwise they
/// stay unset and only the commutant dimension is meaningful.
struct RepresentationClassification {
  bool irreducible = false;
  int commutant_dim = 0;
  std::optional<int> num_irreducible_summands;
  std::optional<int> uhf_summands;
  int peripheral_group_order = 0;
};

namespace detail {

/// Minimal projections spanning an abelian *-closed fixed space, found by
/// eigendecomposing a generic self-adjoint element of the space.
inline std::vector<Eigen::MatrixXcd> minimal_projections(
    const Eigen::MatrixXcd& fixed_basis, int dim) {
  const int n2 = int(fixed_basis.rows());
  const int n = int(std::lround(std::sqrt(double(n2))));
  std::mt19937 rng(0x5eedu);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < int(fixed_basis.cols()); ++k) {
    Eigen::MatrixXcd B =
        Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>(fixed_basis.col(k).data(), n, n);
    const Complex w(unif(rng), unif(rng));
    X += w * B + std::conj(w) * B.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(X);
  const auto& vals = es.eigenvalues();
  std::vector<Eigen::MatrixXcd> projections;
  int i = 0;
  const double scale = std::max(1.0, std::abs(vals(n - 1) - vals(0)));
  while (i < n) {
    int j = i;
    while (j + 1 < n && std::abs(vals(j + 1) - vals(i)) < 1e-6 * scale) ++j;
    Eigen::MatrixXcd Q = es.eigenvectors().middleCols(i, j - i + 1);
    projections.push_back(Q * Q.adjoint());
    i = j + 1;
  }
  if (int(projections.size()) != dim) return {};  // eigenvalue collision; give up
  return projections;
}

/// Peripheral group order of the transfer map compressed to the range of a
/// sigma-fixed projection.
inline int compressed_peripheral_order(const IsometrySystem& sys,
                                       const Eigen::MatrixXcd& projection) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(projection);
  const int n = sys.dim();
  int r = 0;
  for (int i = 0; i < n; ++i)
    if (es.eigenvalues()(i) > 0.5) ++r;
  Eigen::MatrixXcd Q(n, r);
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (es.eigenvalues()(i) > 0.5) Q.col(c++) = es.eigenvectors().col(i);
  IsometrySystem sub;
  sub.scale = sys.scale;
  sub.genus = sys.genus;
  sub.space.exponents.assign(std::size_t(r), 0);
  for (const auto& Vs : sys.v_star) sub.v_star.push_back(Q.adjoint() * Vs * Q);
  const SpectrumReport rep = spectrum(build_sigma(sub));
  return rep.peripheral_group_order;
}

}  // namespace detail

/// Classifies the representation of a valid bank: the commutant dimension is
/// the fixed-space dimension of sigma; dimensions 1-3 force an abelian
/// commutant, so the irreducible-summand count equals the dimension, and the
/// UHF-restriction count is the sum over summands of their peripheral-group
/// orders.
inline RepresentationClassification classify(const FilterBank& bank) {
  const IsometrySystem sys = build_V(bank);
  if (sys.completeness_residual() > 1e-9)
    throw std::invalid_argument("classify: degenerate isometry system");
  const Eigen::MatrixXcd sigma = build_sigma(sys);
  const SpectrumReport rep = spectrum(sigma);
  if (!peripheral_is_cyclic_group(rep))
    throw std::runtime_error("classify: peripheral spectrum is not a cyclic root-of-unity group");

  RepresentationClassification out;
  out.commutant_dim = rep.fixed_space_dim;
  out.irreducible = (out.commutant_dim == 1);
  out.peripheral_group_order = rep.peripheral_group_order;
  if (out.commutant_dim == 1) {
    out.num_irreducible_summands = 1;
    out.uhf_summands = rep.peripheral_group_order;
  } else if (out.commutant_dim <= 3) {
    out.num_irreducible_summands = out.commutant_dim;
    const auto projections =
        detail::minimal_projections(fixed_space_basis(sigma), out.commutant_dim);
    if (!projections.empty()) {
      int uhf = 0;
      bool all_fixed = true;
      for (const auto& p : projections) {
        // each minimal projection must itself be sigma-fixed
        const Eigen::MatrixXcd pt = p.transpose();
        Eigen::Map<const Eigen::VectorXcd> vrow(pt.data(), pt.size());  // row-major vec
        if ((sigma * vrow - vrow).norm() > 1e-7 * vrow.norm()) {
          all_fixed = false;
          break;
        }
        uhf += detail::compressed_peripheral_order(sys, p);
      }
      if (all_fixed) out.uhf_summands = uhf;
    }
  }
  return out;
}

/// Fixed space of A -> sum_i W_i A V_i* with W from bank_a and V from
/// bank_b; nonzero fixed vectors lift to operators intertwining the two
/// representations.  Returns the dimension.
inline int intertwiner_space_dim(const FilterBank& bank_a, const FilterBank& bank_b) {
  if (bank_a.scale != bank_b.scale)
    throw std::invalid_argument("intertwiner_space_dim: scale mismatch");
  const IsometrySystem wa = build_V(bank_a);
  const IsometrySystem vb = build_V(bank_b);
  if (wa.dim() != vb.dim())
    throw std::invalid_argument("intertwiner_space_dim: dimension mismatch");
  return int(fixed_space_basis(build_rho(wa, vb)).cols());
}

/// Basis of the intertwiner fixed space, columns row-major vectorized.
inline Eigen::MatrixXcd intertwiner_fixed_basis(const FilterBank& bank_a,
                                                const FilterBank& bank_b) {
  const IsometrySystem wa = build_V(bank_a);
  const IsometrySystem vb = build_V(bank_b);
  return fixed_space_basis(build_rho(wa, vb));
}

/// <xi, S_I S_J* xi> evaluated inside K: S_I* xi is the word of adjoint
/// compressions applied innermost-letter first (S_I* = s_{i_k}* ... s_{i_1}*).
inline Complex state_eval(const IsometrySystem& sys, const Eigen::VectorXcd& xi,
                          const std::vector<int>& I, const std::vector<int>& J) {
  if (std::abs(xi.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("state_eval: xi must be a unit vector");
  auto word = [&](const std::vector<int>& letters) {
    Eigen::VectorXcd u = xi;
    for (int l : letters) {
      if (l < 0 || l >= int(sys.v_star.size()))
        throw std::invalid_argument("state_eval: letter out of range");
      u = sys.v_star[std::size_t(l)] * u;
    }
    return u;
  };
  const Eigen::VectorXcd u = word(I), w = word(J);
  return u.dot(w);  // conjugate-linear in the first slot
}

}  // namespace cwl

#endif  // CWL_CLASSIFY_HPP
