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

#ifndef CWL_SUBBAND_HPP
#define CWL_SUBBAND_HPP

#include <vector>

#include "cwl/operators.hpp"

namespace cwl {

/// Finitely supported sequence, index -> sample.
using Signal = CoeffMap;

/// Analysis filters (F_j x)_n = sum_k conj(a_{k-Nn}^(j)) x_k: filter by the
/// conjugate row and decimate by N.  Same index arithmetic as the adjoint
/// isometries.
inline std::vector<Signal> subband_analyze(const FilterBank& bank, const Signal& x) {
  std::vector<Signal> bands;
  bands.reserve(bank.rows.size());
  for (int j = 0; j < int(bank.rows.size()); ++j)
    bands.push_back(apply_S_star(bank, j, x));
  return bands;
}

/// Synthesis (F_j* y)_n = sum_k a_{n-Nk}^(j) y_k summed over subbands:
/// upsample by N, filter by the row, add.
inline Signal subband_synthesize(const FilterBank& bank, const std::vector<Signal>& bands) {
  if (bands.size() != bank.rows.size())
    throw std::invalid_argument("subband_synthesize: band count mismatch");
  Signal out;
  for (int j = 0; j < int(bands.size()); ++j)
    add_scaled(out, Complex(1.0, 0.0), apply_S(bank, j, bands[std::size_t(j)]));
  return out;
}

}  // namespace cwl

#endif  // CWL_SUBBAND_HPP
