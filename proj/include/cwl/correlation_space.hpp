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

#ifndef CWL_CORRELATION_SPACE_HPP
#define CWL_CORRELATION_SPACE_HPP

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "cwl/filter_bank.hpp"

namespace cwl {

/// Finite set H of Fourier exponents whose span K is invariant under every
/// adjoint isometry.  Basis order is fixed as e_{h_max}, e_{h_max - 1}, ...
/// (for the scale-2 genus-d case: e_0, e_{-1}, ..., e_{-2d+1}).
struct CorrelationSpace {
  std::vector<int> exponents;  // decreasing

  int dim() const { return int(exponents.size()); }
  bool contains(int n) const {
    return std::find(exponents.begin(), exponents.end(), n) != exponents.end();
  }
  /// Position of exponent n in the basis order; -1 if absent.
  int index_of(int n) const {
    auto it = std::find(exponents.begin(), exponents.end(), n);
    return it == exponents.end() ? -1 : int(it - exponents.begin());
  }
};

/// H = X intersect Z, where X is the attractor of Y -> union_p (Y - p)/N
/// over p in D.  Starts from the integer hull of the fixed interval
/// [-p_max/(N-1), -p_min/(N-1)] and shrinks until stable.
inline CorrelationSpace compute_H(const std::vector<int>& D, int N) {
  if (D.empty()) throw std::invalid_argument("compute_H: empty support");
  if (N < 2) throw std::invalid_argument("compute_H: scale must be >= 2");
  const int pmin = *std::min_element(D.begin(), D.end());
  const int pmax = *std::max_element(D.begin(), D.end());
  const double lo = -double(pmax) / double(N - 1);
  const double hi = -double(pmin) / double(N - 1);
  std::set<int> Y;
  for (int n = int(std::floor(lo)); n <= int(std::ceil(hi)); ++n) Y.insert(n);
  for (;;) {
    std::set<int> next;
    for (int n : Y)
      for (int p : D)
        if ((n - p) % N == 0) {
          const int m = (n - p) / N;
          if (Y.count(m)) next.insert(m);
        }
    if (next == Y) break;
    Y = std::move(next);
    if (Y.empty()) throw std::runtime_error("compute_H: attractor has no integer points");
  }
  CorrelationSpace space;
  space.exponents.assign(Y.rbegin(), Y.rend());
  return space;
}

inline std::vector<int> support_of(const FilterBank& bank) {
  std::set<int> D;
  for (const auto& row : bank.rows)
    for (const auto& [n, a] : row) D.insert(n);
  return {D.begin(), D.end()};
}

inline CorrelationSpace compute_H(const FilterBank& bank) {
  return compute_H(support_of(bank), bank.scale);
}

}  // namespace cwl

#endif  // CWL_CORRELATION_SPACE_HPP
