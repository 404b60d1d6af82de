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

#ifndef CWL_UNITARITY_HPP
#define CWL_UNITARITY_HPP

#include <Eigen/Dense>

#include "cwl/filter_bank.hpp"

namespace cwl {

/// Max over sampled z on the circle of || M(z) M(z)* - I ||_2, where
/// M(z)_{jk} = m_j(rho^k z)/sqrt(N) with rho = e^{2 pi i / N}.
inline double unitarity_check(const FilterBank& bank, int samples) {
  if (samples < 1) throw std::invalid_argument("unitarity_check: samples must be >= 1");
  const int N = bank.scale;
  const double root = 1.0 / std::sqrt(double(N));
  const Complex rho = std::polar(1.0, 2.0 * M_PI / double(N));
  double worst = 0.0;
  for (int t = 0; t < samples; ++t) {
    const Complex z = std::polar(1.0, 2.0 * M_PI * double(t) / double(samples));
    Eigen::MatrixXcd M(N, N);
    for (int j = 0; j < N; ++j) {
      Complex w = z;
      for (int k = 0; k < N; ++k) {
        M(j, k) = root * evaluate(bank, j, w);
        w *= rho;
      }
    }
    const Eigen::MatrixXcd R =
        M * M.adjoint() - Eigen::MatrixXcd::Identity(N, N);
    worst = std::max(worst, R.jacobiSvd().singularValues()(0));
  }
  return worst;
}

}  // namespace cwl

#endif  // CWL_UNITARITY_HPP
