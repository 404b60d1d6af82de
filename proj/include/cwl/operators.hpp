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

#ifndef CWL_OPERATORS_HPP
#define CWL_OPERATORS_HPP

#include <random>
#include <set>
#include <vector>

#include "cwl/correlation_space.hpp"
#include "cwl/filter_bank.hpp"

namespace cwl {

/// Trigonometric polynomial sum_n c_n z^n with finite support.
using TrigPoly = CoeffMap;

inline TrigPoly monomial(int n, Complex c = Complex(1.0, 0.0)) { return {{n, c}}; }

inline void add_scaled(TrigPoly& dst, Complex s, const TrigPoly& src) {
  for (const auto& [n, c] : src) {
    const Complex v = dst[n] + s * c;
    if (v == Complex(0.0, 0.0))
      dst.erase(n);
    else
      dst[n] = v;
  }
}

inline Complex inner(const TrigPoly& a, const TrigPoly& b) {
  Complex s(0.0, 0.0);
  for (const auto& [n, c] : a) s += std::conj(c) * coeff_at(b, n);
  return s;
}

inline double norm(const TrigPoly& a) { return std::sqrt(inner(a, a).real()); }

inline double distance(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly d = a;
  add_scaled(d, Complex(-1.0, 0.0), b);
  return norm(d);
}

/// S_j xi: coefficient-exact form of m_j(z) xi(z^N),
/// S_j e_n = sum_{k in D} a_k^(j) e_{k + N n}.
inline TrigPoly apply_S(const FilterBank& bank, int j, const TrigPoly& xi) {
  const int N = bank.scale;
  TrigPoly out;
  for (const auto& [n, c] : xi)
    for (const auto& [k, a] : bank.rows[std::size_t(j)]) {
      const Complex v = out[k + N * n] + a * c;
      if (v == Complex(0.0, 0.0))
        out.erase(k + N * n);
      else
        out[k + N * n] = v;
    }
  return out;
}

/// S_j* xi: S_j* e_n = sum_{p in D, p = n mod N} conj(a_p^(j)) e_{(n-p)/N}.
inline TrigPoly apply_S_star(const FilterBank& bank, int j, const TrigPoly& xi) {
  const int N = bank.scale;
  TrigPoly out;
  for (const auto& [n, c] : xi)
    for (const auto& [p, a] : bank.rows[std::size_t(j)]) {
      int diff = n - p;
      if (diff % N != 0) continue;
      const int m = diff / N;
      const Complex v = out[m] + std::conj(a) * c;
      if (v == Complex(0.0, 0.0))
        out.erase(m);
      else
        out[m] = v;
    }
  return out;
}

/// Reflection (W f)(z) = z^{-D} f(z^{-1}); coefficient at n moves to -D - n.
inline TrigPoly reflect_W(const TrigPoly& xi, int degree) {
  TrigPoly out;
  for (const auto& [n, c] : xi) out[-degree - n] = c;
  return out;
}

/// The singular-point intertwiner U e_n = e_{-3n-6}.
inline TrigPoly intertwiner_U(const TrigPoly& xi) {
  TrigPoly out;
  for (const auto& [n, c] : xi) out[-3 * n - 6] = c;
  return out;
}

inline TrigPoly random_trig_poly(std::mt19937_64& rng, int radius) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  TrigPoly out;
  for (int n = -radius; n <= radius; ++n) out[n] = Complex(unif(rng), 0.0);
  return out;
}

/// Max residual of the Cuntz relations S_j* S_i = delta_ij and
/// sum_i S_i S_i* = 1 over random finitely supported polynomials.
inline double verify_cuntz(const FilterBank& bank, int trials, int support_radius,
                           std::uint64_t seed = 1u) {
  const int N = bank.scale;
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const TrigPoly xi = random_trig_poly(rng, support_radius);
    for (int i = 0; i < N; ++i) {
      const TrigPoly Si = apply_S(bank, i, xi);
      for (int j = 0; j < N; ++j) {
        TrigPoly r = apply_S_star(bank, j, Si);
        if (i == j) add_scaled(r, Complex(-1.0, 0.0), xi);
        worst = std::max(worst, norm(r));
      }
    }
    TrigPoly sum;
    for (int i = 0; i < N; ++i)
      add_scaled(sum, Complex(1.0, 0.0), apply_S(bank, i, apply_S_star(bank, i, xi)));
    add_scaled(sum, Complex(-1.0, 0.0), xi);
    worst = std::max(worst, norm(sum));
  }
  return worst;
}

/// Exponents reachable from n by `steps` applications of any S_j*,
/// following the support transitions n -> (n - p)/N for p in the bank
/// support with matching residue and a nonzero coefficient in some row.
inline std::set<int> reach_exponents(const FilterBank& bank, int n, int steps) {
  const int N = bank.scale;
  std::set<int> usable;
  for (const auto& row : bank.rows)
    for (const auto& [p, a] : row)
      if (a != Complex(0.0, 0.0)) usable.insert(p);
  std::set<int> cur{n};
  for (int s = 0; s < steps; ++s) {
    std::set<int> next;
    for (int x : cur)
      for (int p : usable)
        if ((x - p) % N == 0) next.insert((x - p) / N);
    cur = std::move(next);
  }
  return cur;
}

/// Smallest M such that every adjoint word of length M maps e_n into
/// span{e_m : m in H}, H the attractor exponent set of the bank.
inline int settle_length(const FilterBank& bank, int n, int max_depth = 64) {
  const CorrelationSpace H = compute_H(bank);
  std::set<int> target(H.exponents.begin(), H.exponents.end());
  std::set<int> cur{n};
  for (int m = 0; m <= max_depth; ++m) {
    bool inside = true;
    for (int x : cur)
      if (!target.count(x)) {
        inside = false;
        break;
      }
    if (inside) return m;
    cur = reach_exponents(bank, n, m + 1);
  }
  throw std::runtime_error("settle_length: search aborted at depth 64");
}

}  // namespace cwl

#endif  // CWL_OPERATORS_HPP
