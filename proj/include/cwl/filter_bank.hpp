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

#ifndef CWL_FILTER_BANK_HPP
#define CWL_FILTER_BANK_HPP

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

namespace cwl {

using Complex = std::complex<double>;

/// Sparse Laurent coefficient sequence, exponent -> coefficient.
/// Exponent arithmetic is exact; zero entries are pruned.
using CoeffMap = std::map<int, Complex>;

inline void prune(CoeffMap& c, double eps = 0.0) {
  for (auto it = c.begin(); it != c.end();) {
    if (std::abs(it->second) <= eps) {
      it = c.erase(it);
    } else {
      ++it;
    }
  }
}

inline Complex coeff_at(const CoeffMap& c, int n) {
  auto it = c.find(n);
  return it == c.end() ? Complex(0.0, 0.0) : it->second;
}

/// Subband filter bank of scale N: polynomials m_0 (low-pass) through
/// m_{N-1} (high-pass) with finite common support D.  For the real
/// scale-2 family of genus d the low-pass support is {0, ..., 2d-1}.
struct FilterBank {
  int scale = 2;                 // N
  int genus = 1;                 // d
  std::vector<CoeffMap> rows;    // coefficients of m_0 .. m_{N-1}

  int support_min() const {
    int lo = 0;
    bool first = true;
    for (const auto& row : rows)
      for (const auto& [n, a] : row) {
        lo = first ? n : std::min(lo, n);
        first = false;
      }
    return lo;
  }
  int support_max() const {
    int hi = 0;
    bool first = true;
    for (const auto& row : rows)
      for (const auto& [n, a] : row) {
        hi = first ? n : std::max(hi, n);
        first = false;
      }
    return hi;
  }
  bool is_real(double eps = 1e-12) const {
    for (const auto& row : rows)
      for (const auto& [n, a] : row)
        if (std::abs(a.imag()) > eps) return false;
    return true;
  }
};

/// Angle on the parameter circle, reduced to [0, 2*pi).
struct ThetaPoint {
  double theta = 0.0;
  explicit ThetaPoint(double t) {
    constexpr double two_pi = 2.0 * M_PI;
    theta = std::fmod(t, two_pi);
    if (theta < 0.0) theta += two_pi;
  }
};

/// High-pass coefficients b_k = (-1)^k a_{2d-1-k} from a low-pass row
/// supported in {0, ..., 2d-1}.
inline CoeffMap high_pass_from_low(const CoeffMap& low, int d) {
  if (d < 1) throw std::invalid_argument("high_pass_from_low: genus must be >= 1");
  const int top = 2 * d - 1;
  for (const auto& [n, a] : low)
    if (n < 0 || n > top)
      throw std::invalid_argument("high_pass_from_low: support outside {0,...,2d-1}");
  CoeffMap out;
  for (const auto& [n, a] : low) {
    const int k = top - n;
    const Complex b = (k % 2 == 0 ? a : -a);
    if (b != Complex(0.0, 0.0)) out[k] = b;
  }
  return out;
}

/// Genus-2 family on the circle: coefficients of (eq. below) with
///   a0 = (1 - cos t + sin t)/(2 sqrt 2),  a1 = (1 - cos t - sin t)/(2 sqrt 2),
///   a2 = (1 + cos t - sin t)/(2 sqrt 2),  a3 = (1 + cos t + sin t)/(2 sqrt 2).
/// Contains the Daubechies filter at t = 7*pi/6 and Haar-type filters at
/// multiples of pi/2.
inline FilterBank from_theta(const ThetaPoint& t) {
  const double s = std::sin(t.theta), c = std::cos(t.theta);
  const double f = 1.0 / (2.0 * std::sqrt(2.0));
  const double a0 = f * (1.0 - c + s);
  const double a1 = f * (1.0 - c - s);
  const double a2 = f * (1.0 + c - s);
  const double a3 = f * (1.0 + c + s);
  FilterBank bank;
  bank.scale = 2;
  bank.genus = 2;
  CoeffMap low{{0, a0}, {1, a1}, {2, a2}, {3, a3}};
  bank.rows = {low, high_pass_from_low(low, 2)};
  return bank;
}

inline FilterBank from_theta(double theta) { return from_theta(ThetaPoint(theta)); }

/// The Haar bank: m0 = (1+z)/sqrt2, m1 = (1-z)/sqrt2.
inline FilterBank haar() {
  const double r = 1.0 / std::sqrt(2.0);
  FilterBank bank;
  bank.scale = 2;
  bank.genus = 1;
  bank.rows = {CoeffMap{{0, r}, {1, r}}, CoeffMap{{0, r}, {1, -r}}};
  return bank;
}

/// Residuals of the three quadrature-mirror constraint families.
struct ValidationReport {
  double row_orthonormality = 0.0;  // | sum |a|^2 - 1 | and aliased self products
  double cross_row = 0.0;           // aliased products between distinct rows
  double normalization = 0.0;       // | sum a^(0) - sqrt(N) |
  double max_residual() const {
    return std::max(row_orthonormality, std::max(cross_row, normalization));
  }
  bool ok(double tol = 1e-12) const { return max_residual() < tol; }
};

/// Checks sum_n a_n^(j) conj(a_{n-mN}^(j)) = delta_{m,0}, the cross-row
/// analogue for all m, and sum_n a_n^(0) = sqrt(N).
inline ValidationReport validate(const FilterBank& bank) {
  ValidationReport rep;
  const int N = bank.scale;
  const int lo = bank.support_min(), hi = bank.support_max();
  const int mmax = (hi - lo) / N + 1;
  for (std::size_t i = 0; i < bank.rows.size(); ++i) {
    for (std::size_t j = i; j < bank.rows.size(); ++j) {
      for (int m = -mmax; m <= mmax; ++m) {
        Complex sum(0.0, 0.0);
        for (const auto& [n, a] : bank.rows[i])
          sum += a * std::conj(coeff_at(bank.rows[j], n - m * N));
        const Complex want = (i == j && m == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
        const double res = std::abs(sum - want);
        if (i == j)
          rep.row_orthonormality = std::max(rep.row_orthonormality, res);
        else
          rep.cross_row = std::max(rep.cross_row, res);
      }
    }
  }
  Complex total(0.0, 0.0);
  if (!bank.rows.empty())
    for (const auto& [n, a] : bank.rows[0]) total += a;
  rep.normalization = std::abs(total - Complex(std::sqrt(double(N)), 0.0));
  return rep;
}

/// Substitution m_j(z) -> m_j(z^{2p+1}) on every row.
inline FilterBank substitute_odd(const FilterBank& bank, int p) {
  if (bank.scale != 2) throw std::invalid_argument("substitute_odd: requires scale N = 2");
  if (p < 1) throw std::invalid_argument("substitute_odd: p must be >= 1");
  const int q = 2 * p + 1;
  FilterBank out;
  out.scale = bank.scale;
  // support stretches to {0, ..., (2p+1)(2d-1)}; the enclosing genus keeps
  // (2d'-1) equal to the new support length.
  out.genus = (q * (2 * bank.genus - 1) + 1) / 2;
  out.rows.reserve(bank.rows.size());
  for (const auto& row : bank.rows) {
    CoeffMap r;
    for (const auto& [n, a] : row) r[q * n] = a;
    out.rows.push_back(std::move(r));
  }
  return out;
}

/// Coefficient reversal (a_0,...,a_3) -> (a_3,...,a_0); sends the family
/// member at angle t to the one at pi - t.
inline FilterBank reflect_theta(const FilterBank& bank) {
  if (bank.scale != 2 || bank.genus != 2)
    throw std::invalid_argument("reflect_theta: requires an N = 2, genus-2 bank");
  CoeffMap low;
  for (const auto& [n, a] : bank.rows[0]) low[3 - n] = a;
  FilterBank out;
  out.scale = 2;
  out.genus = 2;
  out.rows = {low, high_pass_from_low(low, 2)};
  return out;
}

inline Complex ipow(Complex z, int n) {
  if (n < 0) return ipow(Complex(1.0, 0.0) / z, -n);
  Complex r(1.0, 0.0);
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

/// m_j(z) for |z| = 1 (within 1e-12).
inline Complex evaluate(const FilterBank& bank, int j, Complex z) {
  if (j < 0 || j >= int(bank.rows.size()))
    throw std::invalid_argument("evaluate: row index out of range");
  if (std::abs(std::abs(z) - 1.0) > 1e-12)
    throw std::invalid_argument("evaluate: z must lie on the unit circle");
  Complex sum(0.0, 0.0);
  for (const auto& [n, a] : bank.rows[j]) sum += a * ipow(z, n);
  return sum;
}

}  // namespace cwl

#endif  // CWL_FILTER_BANK_HPP
