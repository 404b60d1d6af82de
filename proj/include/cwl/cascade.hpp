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

#ifndef CWL_CASCADE_HPP
#define CWL_CASCADE_HPP

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "cwl/filter_bank.hpp"

namespace cwl {

/// Dyadic-grid samples of the scaling-function approximant phi_n (and the
/// mother psi derived from it) on the support [0, 2d-1], grid step 2^-L.
struct CascadeResult {
  int level = 8;       // L
  int iterations = 0;  // n
  int support = 1;     // 2d-1
  Eigen::VectorXd phi;
  Eigen::VectorXd psi;  // empty until cascade_mother

  double step() const { return std::ldexp(1.0, -level); }
  /// Left Riemann sum over the support (the endpoint sample is excluded).
  double integral_phi() const {
    return phi.head(phi.size() - 1).sum() * step();
  }
};

/// Seed function phi_0 for the iteration.
enum class CascadeSeed {
  unit_box,      // chi_[0,1), left-closed: the Haar fixed point
  centered_box,  // chi_[d-1,d] with half-weight endpoints: reversal-symmetric
};

namespace detail {

inline std::map<int, double> real_row(const FilterBank& bank, int j) {
  std::map<int, double> out;
  for (const auto& [n, a] : bank.rows[std::size_t(j)])
    if (a != Complex(0.0, 0.0)) out[n] = a.real();
  return out;
}

/// One refinement pass: next(x) = sqrt2 * sum_k a_k cur(2x - k), exact on the
/// grid since 2 x_i - k lands on grid points.
inline Eigen::VectorXd refine(const std::map<int, double>& a, int L,
                              const Eigen::VectorXd& cur) {
  const long total = cur.size() - 1;
  const double root2 = std::sqrt(2.0);
  Eigen::VectorXd next = Eigen::VectorXd::Zero(cur.size());
  for (const auto& [k, ak] : a) {
    const long off = long(k) << L;
    for (long i = 0; i <= total; ++i) {
      const long j = 2 * i - off;
      if (j < 0 || j > total) continue;
      next[i] += root2 * ak * cur[j];
    }
  }
  return next;
}

}  // namespace detail

/// Iterates phi_{m+1}(x) = sqrt2 sum_k a_k phi_m(2x - k) from the chosen seed.
inline CascadeResult cascade_father(const FilterBank& bank, int iterations, int level,
                                    CascadeSeed seed = CascadeSeed::unit_box) {
  if (bank.scale != 2) throw std::invalid_argument("cascade_father: requires N = 2");
  if (!bank.is_real()) throw std::invalid_argument("cascade_father: requires a real bank");
  if (iterations < 0) throw std::invalid_argument("cascade_father: iterations must be >= 0");
  if (level < 3) throw std::invalid_argument("cascade_father: level must be >= 3");
  if (bank.support_min() < 0 || bank.support_max() > 2 * bank.genus - 1)
    throw std::invalid_argument("cascade_father: support must lie in {0, ..., 2d-1}");

  CascadeResult res;
  res.level = level;
  res.iterations = iterations;
  res.support = 2 * bank.genus - 1;
  const long per_unit = 1L << level;
  const long total = res.support * per_unit;
  res.phi = Eigen::VectorXd::Zero(total + 1);
  if (seed == CascadeSeed::unit_box) {
    for (long i = 0; i < per_unit; ++i) res.phi[i] = 1.0;
  } else {
    const long lo = (bank.genus - 1) * per_unit;
    for (long i = lo; i <= lo + per_unit; ++i) res.phi[i] = 1.0;
    res.phi[lo] = 0.5;
    res.phi[lo + per_unit] = 0.5;
  }
  const auto a = detail::real_row(bank, 0);
  for (int m = 0; m < iterations; ++m) res.phi = detail::refine(a, level, res.phi);
  return res;
}

/// psi(x) = sqrt2 sum_k b_k phi(2x - k) with b the high-pass row.
inline CascadeResult cascade_mother(const FilterBank& bank, const CascadeResult& father) {
  if (father.support != 2 * bank.genus - 1 ||
      father.phi.size() != father.support * (1L << father.level) + 1)
    throw std::invalid_argument("cascade_mother: grid does not match the bank");
  CascadeResult res = father;
  res.psi = detail::refine(detail::real_row(bank, 1), father.level, father.phi);
  return res;
}

/// Correlation coefficients c_k = (1/sqrt2) int conj(phi(x-k)) phi(x/2) dx,
/// computed as sqrt2 * h * sum_i phi[2i - k 2^L] phi[i] (exact for step
/// functions with dyadic jumps).
inline std::map<int, double> correlation_coeffs(const CascadeResult& father) {
  if (father.level < 6)
    throw std::invalid_argument("correlation_coeffs: level must be >= 6");
  const long total = father.phi.size() - 1;
  const long per_unit = 1L << father.level;
  const double h = father.step();
  std::map<int, double> c;
  for (int k = -(father.support - 1); k <= 2 * father.support - 1; ++k) {
    double s = 0.0;
    for (long i = 0; i < total; ++i) {
      const long j = 2 * i - long(k) * per_unit;
      if (j >= 0 && j <= total) s += father.phi[j] * father.phi[i];
    }
    c[k] = std::sqrt(2.0) * h * s;
  }
  return c;
}

/// Exact box scaling function (1/s) chi_[0,s] as a CascadeResult (the
/// closed-form father for substituted Haar filters, e.g. theta = pi/2 with
/// s = 3).
inline CascadeResult box_scaling(int support, int level) {
  CascadeResult res;
  res.level = level;
  res.iterations = 0;
  res.support = support;
  const long total = long(support) << level;
  res.phi = Eigen::VectorXd::Zero(total + 1);
  for (long i = 0; i < total; ++i) res.phi[i] = 1.0 / double(support);
  return res;
}

struct DiscrepancyReport {
  double sum_sq = 0.0;
  double bound = 0.0;
  bool applicable = false;  // false for an unsubstituted orthonormal bank
  bool holds = false;
};

/// Checks sum_k |c_k|^2 <= 1/(2p+1) for correlations of a substituted filter.
inline DiscrepancyReport discrepancy_check(const std::map<int, double>& c, int p) {
  DiscrepancyReport rep;
  for (const auto& [k, v] : c) rep.sum_sq += v * v;
  rep.applicable = p >= 1;
  rep.bound = 1.0 / double(2 * p + 1);
  rep.holds = rep.sum_sq <= rep.bound + 1e-6;
  return rep;
}

/// Truncated Mallat products for phi-hat and psi-hat:
/// phi_hat(w) = (2pi)^{-1/2} prod_{k=1}^K m0(e^{-i w / 2^k}) / sqrt2,
/// psi_hat uses the m1 prefactor at k = 1.
struct MallatSamples {
  Eigen::VectorXcd phi_hat;
  Eigen::VectorXcd psi_hat;
};

inline MallatSamples mallat_product(const FilterBank& bank,
                                    const std::vector<double>& omega_grid, int terms) {
  if (terms < 1) throw std::invalid_argument("mallat_product: terms must be >= 1");
  MallatSamples out;
  out.phi_hat.resize(long(omega_grid.size()));
  out.psi_hat.resize(long(omega_grid.size()));
  const double front = 1.0 / std::sqrt(2.0 * M_PI);
  const double root2 = std::sqrt(2.0);
  for (std::size_t t = 0; t < omega_grid.size(); ++t) {
    const double w = omega_grid[t];
    Complex phi(front, 0.0), psi(front, 0.0);
    for (int k = 1; k <= terms; ++k) {
      const Complex z = std::polar(1.0, -w / std::pow(2.0, k));
      phi *= evaluate(bank, 0, z) / root2;
      psi *= evaluate(bank, k == 1 ? 1 : 0, z) / root2;
    }
    out.phi_hat[long(t)] = phi;
    out.psi_hat[long(t)] = psi;
  }
  return out;
}

struct MirrorReport {
  double father_dev = 0.0;  // max |phi^(pi-t)(x) - phi^(t)((2d-1) - x)|
  double mother_dev = 0.0;  // max |psi^(pi-t)(x) + psi^(t)((2d-1) - x)|
};

/// Runs the cascade for the bank and its coefficient reversal from the
/// reversal-symmetric centered seed, for which the reflection identity holds
/// at every finite level, and reports the grid deviations.
inline MirrorReport mirror_check(const FilterBank& bank, int level, int iterations) {
  const FilterBank mirrored = reflect_theta(bank);
  CascadeResult a = cascade_father(mirrored, iterations, level, CascadeSeed::centered_box);
  CascadeResult b = cascade_father(bank, iterations, level, CascadeSeed::centered_box);
  a = cascade_mother(mirrored, a);
  b = cascade_mother(bank, b);
  const long total = a.phi.size() - 1;
  MirrorReport rep;
  for (long i = 0; i <= total; ++i) {
    rep.father_dev = std::max(rep.father_dev, std::abs(a.phi[i] - b.phi[total - i]));
    rep.mother_dev = std::max(rep.mother_dev, std::abs(a.psi[i] + b.psi[total - i]));
  }
  return rep;
}

}  // namespace cwl

#endif  // CWL_CASCADE_HPP
