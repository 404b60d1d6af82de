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

#ifndef CWL_CYCLES_HPP
#define CWL_CYCLES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <vector>

#include "cwl/filter_bank.hpp"

namespace cwl {

/// A doubling-map cycle on the circle: points listed in the order
/// z -> z^2 -> ... -> z, stored both numerically and as exact fractions of a
/// turn (members of a length-k cycle are (2^k - 1)-th roots of unity).
struct Cycle {
  std::vector<std::pair<long long, long long>> turns;  // reduced num/den
  std::vector<Complex> points;
  bool trivial() const {
    return turns.size() == 1 && turns[0].first == 0;
  }
};

struct CycleSet {
  std::vector<Complex> zeros;       // unit-circle zeros of z -> m0(-z)
  std::vector<Complex> borderline;  // roots with | |z|-1 | in [1e-8, 1e-5]
  std::vector<Cycle> cycles;
  bool contains_nontrivial = false;
};

enum class FrameStatus { orthonormal_basis, tight_frame_only };

namespace detail {

/// Roots of sum_k coeffs[k] z^k via the companion matrix, after trimming
/// relatively negligible leading coefficients.
inline std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs) {
  double top = 0.0;
  for (const Complex& c : coeffs) top = std::max(top, std::abs(c));
  if (top == 0.0) throw std::invalid_argument("polynomial_roots: zero polynomial");
  while (!coeffs.empty() && std::abs(coeffs.back()) < 1e-13 * top) coeffs.pop_back();
  int shift = 0;  // trailing zeros are roots at the origin
  while (shift < int(coeffs.size()) && std::abs(coeffs[std::size_t(shift)]) < 1e-13 * top)
    ++shift;
  const int deg = int(coeffs.size()) - 1 - shift;
  std::vector<Complex> roots(std::size_t(std::max(shift, 0)), Complex(0.0, 0.0));
  if (deg < 1) return roots;
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
  const Complex lead = coeffs[std::size_t(shift + deg)];
  for (int i = 0; i < deg; ++i) C(i, deg - 1) = -coeffs[std::size_t(shift + i)] / lead;
  for (int i = 1; i < deg; ++i) C(i, i - 1) = Complex(1.0, 0.0);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  for (int i = 0; i < deg; ++i) roots.push_back(es.eigenvalues()(i));
  return roots;
}

}  // namespace detail

/// Unit-circle zeros of z -> m0(-z), deduplicated within 1e-8; roots merely
/// near the circle (distance in [1e-8, 1e-5]) are returned as warnings.
inline CycleSet circle_zeros(const CoeffMap& m0) {
  if (m0.empty()) throw std::invalid_argument("circle_zeros: zero polynomial");
  const int lo = m0.begin()->first;
  const int hi = m0.rbegin()->first;
  std::vector<Complex> coeffs(std::size_t(hi - lo + 1), Complex(0.0, 0.0));
  for (const auto& [n, a] : m0) {
    const int k = n - lo;
    coeffs[std::size_t(k)] = (n % 2 == 0) ? a : -a;  // substitute z -> -z
  }
  CycleSet out;
  for (const Complex& r : detail::polynomial_roots(coeffs)) {
    const double off = std::abs(std::abs(r) - 1.0);
    if (off < 1e-8) {
      bool dup = false;
      for (const Complex& z : out.zeros)
        if (std::abs(z - r) < 1e-8) dup = true;
      if (!dup) out.zeros.push_back(r);
    } else if (off <= 1e-5) {
      out.borderline.push_back(r);
    }
  }
  std::sort(out.zeros.begin(), out.zeros.end(), [](const Complex& a, const Complex& b) {
    return std::arg(a) < std::arg(b);
  });
  return out;
}

/// Detects cycles of length <= max_len inside the given zero set.  Candidate
/// points are generated exactly as (2^k - 1)-th roots of unity and matched to
/// the zeros within 1e-8.
inline CycleSet find_cycles(const CycleSet& zeros_in, int max_len) {
  if (max_len < 1) throw std::invalid_argument("find_cycles: max_len must be >= 1");
  max_len = std::min(max_len, 40);
  CycleSet out = zeros_in;
  out.cycles.clear();
  out.contains_nontrivial = false;

  auto in_zero_set = [&](long long num, long long den) {
    const Complex z = std::polar(1.0, 2.0 * M_PI * double(num) / double(den));
    for (const Complex& w : out.zeros)
      if (std::abs(w - z) < 1e-8) return true;
    return false;
  };
  std::vector<std::vector<std::pair<long long, long long>>> seen;

  for (const Complex& z : out.zeros) {
    double t = std::arg(z) / (2.0 * M_PI);
    if (t < 0.0) t += 1.0;
    for (int k = 1; k <= max_len; ++k) {
      const long long m = (1LL << k) - 1;
      const long long j = std::llround(t * double(m)) % m;
      const Complex cand = std::polar(1.0, 2.0 * M_PI * double(j) / double(m));
      if (std::abs(cand - z) >= 1e-8) continue;
      // orbit of j/m under doubling
      std::vector<long long> orbit{j};
      long long cur = (2 * j) % m;
      while (cur != j) {
        orbit.push_back(cur);
        cur = (2 * cur) % m;
      }
      std::vector<std::pair<long long, long long>> reduced;
      for (long long o : orbit) {
        const long long g = std::gcd(o == 0 ? m : o, m);
        reduced.emplace_back(o / g, m / g);
      }
      auto canon = reduced;
      std::sort(canon.begin(), canon.end());
      if (std::find(seen.begin(), seen.end(), canon) != seen.end()) break;
      bool all_zero = true;
      for (const auto& [num, den] : reduced)
        if (!in_zero_set(num, den)) {
          all_zero = false;
          break;
        }
      if (all_zero) {
        seen.push_back(canon);
        Cycle cyc;
        // start the chain at the smallest fraction
        const std::size_t start =
            std::size_t(std::min_element(reduced.begin(), reduced.end()) - reduced.begin());
        for (std::size_t idx = 0; idx < reduced.size(); ++idx) {
          const auto& fr = reduced[(start + idx) % reduced.size()];
          cyc.turns.push_back(fr);
          cyc.points.push_back(
              std::polar(1.0, 2.0 * M_PI * double(fr.first) / double(fr.second)));
        }
        if (!cyc.trivial()) out.contains_nontrivial = true;
        out.cycles.push_back(std::move(cyc));
      }
      break;  // the matching root-of-unity order is unique
    }
  }
  return out;
}

/// Orthonormal basis vs tight frame: tight_frame_only when the zero set of
/// m0(-z) carries a nontrivial doubling-map cycle.
inline FrameStatus frame_classify(const FilterBank& bank) {
  if (bank.scale != 2) throw std::invalid_argument("frame_classify: requires N = 2");
  if (!validate(bank).ok(1e-9))
    throw std::invalid_argument("frame_classify: bank fails validation");
  const CoeffMap& m0 = bank.rows[0];
  const int degree = std::max(1, m0.empty() ? 1 : m0.rbegin()->first - m0.begin()->first);
  const CycleSet cs = find_cycles(circle_zeros(m0), degree);
  return cs.contains_nontrivial ? FrameStatus::tight_frame_only
                                : FrameStatus::orthonormal_basis;
}

}  // namespace cwl

#endif  // CWL_CYCLES_HPP
