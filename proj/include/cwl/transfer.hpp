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

#ifndef CWL_TRANSFER_HPP
#define CWL_TRANSFER_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cwl/isometries.hpp"

namespace cwl {

/// Matrix of A -> sum_i W_i A V_i* acting on row-major vectorized A in the
/// basis e_{0,0}, e_{0,-1}, ..., e_{-2d+1,-2d+1}:
/// vec(W A V*) = kron(W, conj(V)) vec(A).
inline Eigen::MatrixXcd build_rho(const IsometrySystem& sys_w,
                                  const IsometrySystem& sys_v) {
  const int n = sys_v.dim();
  if (sys_w.dim() != n)
    throw std::invalid_argument("build_rho: dimension mismatch");
  if (sys_w.v_star.size() != sys_v.v_star.size())
    throw std::invalid_argument("build_rho: scale mismatch");
  Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (std::size_t i = 0; i < sys_v.v_star.size(); ++i) {
    const Eigen::MatrixXcd W = sys_w.v(int(i));
    const Eigen::MatrixXcd Vc = sys_v.v(int(i)).conjugate();
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        R.block(r * n, c * n, n, n) += W(r, c) * Vc;
  }
  return R;
}

/// Matrix of the transfer map sigma(A) = sum_i V_i A V_i*.
inline Eigen::MatrixXcd build_sigma(const IsometrySystem& sys) {
  return build_rho(sys, sys);
}

/// Spectrum of a transfer-type map: eigenvalues clustered into
/// (value, multiplicity) pairs, the dimension of the fixed space, and the
/// order of the peripheral eigenvalue group.
struct SpectrumReport {
  struct Cluster {
    Complex value;
    int multiplicity = 0;
  };
  std::vector<Cluster> eigenvalues;  // sorted by |value| desc, then by angle
  int fixed_space_dim = 0;
  int peripheral_group_order = 0;
};

/// Orthonormal basis (columns) of ker(M - lambda I) via SVD rank test with
/// threshold tol * ||M||_2.
inline Eigen::MatrixXcd eigenspace_basis(const Eigen::MatrixXcd& M, Complex lambda,
                                         double tol = 1e-9) {
  const int n = int(M.rows());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      M - lambda * Eigen::MatrixXcd::Identity(n, n), Eigen::ComputeFullV);
  const double norm = M.jacobiSvd().singularValues()(0);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * norm) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

inline Eigen::MatrixXcd fixed_space_basis(const Eigen::MatrixXcd& M,
                                          double tol = 1e-9) {
  return eigenspace_basis(M, Complex(1.0, 0.0), tol);
}

/// sin of the largest principal angle between the column spans of A and B.
/// Computed from projection residuals, which stays accurate near zero.
inline double subspace_angle(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  auto orth = [](const Eigen::MatrixXcd& X) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(X);
    Eigen::MatrixXcd Q = qr.householderQ();
    return Eigen::MatrixXcd(Q.leftCols(X.cols()));
  };
  const Eigen::MatrixXcd Qa = orth(A), Qb = orth(B);
  const Eigen::MatrixXcd Ra = Qb - Qa * (Qa.adjoint() * Qb);
  const Eigen::MatrixXcd Rb = Qa - Qb * (Qb.adjoint() * Qa);
  const double sa = Ra.jacobiSvd().singularValues()(0);
  const double sb = Rb.jacobiSvd().singularValues()(0);
  return std::max(sa, sb);
}

/// Algebraic multiplicity of the eigenvalue 0 by the staircase method:
/// dim ker(M^{k+1}) = dim ker((I - P_k) M) with P_k the projector onto the
/// generalized kernel found so far.  Unlike ranks of explicit powers this
/// keeps singular values on the scale of M, so a rank threshold of
/// tol * ||M|| stays meaningful at every stage.
inline int zero_algebraic_multiplicity(const Eigen::MatrixXcd& M, double tol = 1e-9) {
  const int n = int(M.rows());
  const double norm = M.jacobiSvd().singularValues()(0);
  if (norm == 0.0) return n;
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(n, n);
  int total = 0;
  for (int stage = 0; stage < n; ++stage) {
    const Eigen::MatrixXcd R = (Eigen::MatrixXcd::Identity(n, n) - P) * M;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(R, Eigen::ComputeFullV);
    int rank = 0;
    for (int i = 0; i < n; ++i)
      if (svd.singularValues()(i) > tol * norm) ++rank;
    if (n - rank == total) break;
    total = n - rank;
    const Eigen::MatrixXcd K = svd.matrixV().rightCols(n - rank);
    P = K * K.adjoint();
  }
  return total;
}

inline SpectrumReport spectrum(const Eigen::MatrixXcd& M, double cluster_tol = 1e-9,
                               double rank_tol = 1e-9) {
  if (M.rows() != M.cols()) throw std::invalid_argument("spectrum: matrix not square");
  SpectrumReport rep;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, /*computeEigenvectors=*/false);
  std::vector<Complex> ev(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(),
            [](const Complex& a, const Complex& b) { return std::abs(a) < std::abs(b); });

  // A nilpotent part makes the computed zero group splatter on the scale of
  // sqrt(machine eps), far beyond cluster_tol; its multiplicity comes from a
  // rank analysis instead.
  std::size_t skip = 0;
  const int zero_mult = zero_algebraic_multiplicity(M, rank_tol);
  const double norm = M.jacobiSvd().singularValues()(0);
  if (zero_mult > 0 && std::abs(ev[std::size_t(zero_mult) - 1]) < 1e-5 * std::max(norm, 1.0)) {
    rep.eigenvalues.push_back({Complex(0.0, 0.0), zero_mult});
    skip = std::size_t(zero_mult);
  }

  std::vector<bool> used(ev.size(), false);
  for (std::size_t i = skip; i < ev.size(); ++i) {
    if (used[i]) continue;
    SpectrumReport::Cluster cl{ev[i], 1};
    used[i] = true;
    for (std::size_t j = i + 1; j < ev.size(); ++j)
      if (!used[j] && std::abs(ev[j] - cl.value) <= cluster_tol) {
        used[j] = true;
        ++cl.multiplicity;
      }
    rep.eigenvalues.push_back(cl);
  }
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
            [](const auto& a, const auto& b) {
              const double ma = std::abs(a.value), mb = std::abs(b.value);
              if (std::abs(ma - mb) > 1e-15) return ma > mb;
              return std::arg(a.value) < std::arg(b.value);
            });
  rep.fixed_space_dim = int(fixed_space_basis(M, rank_tol).cols());
  for (const auto& cl : rep.eigenvalues)
    if (std::abs(cl.value) >= 1.0 - 1e-9) ++rep.peripheral_group_order;
  return rep;
}

/// Checks that the peripheral eigenvalues are exactly the k-th roots of
/// unity for k = peripheral_group_order, within tol.
inline bool peripheral_is_cyclic_group(const SpectrumReport& rep, double tol = 1e-7) {
  const int k = rep.peripheral_group_order;
  if (k == 0) return true;
  std::vector<Complex> per;
  for (const auto& cl : rep.eigenvalues)
    if (std::abs(cl.value) >= 1.0 - 1e-9) per.push_back(cl.value);
  std::vector<bool> hit(k, false);
  for (const Complex& v : per) {
    bool matched = false;
    for (int j = 0; j < k; ++j) {
      const Complex root = std::polar(1.0, 2.0 * M_PI * double(j) / double(k));
      if (std::abs(v - root) < tol) {
        if (hit[j]) return false;
        hit[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace cwl

#endif  // CWL_TRANSFER_HPP
