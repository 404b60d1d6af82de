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

#include <doctest.h>

#include "cwl/cycles.hpp"

using cwl::Complex;
using cwl::CycleSet;
using cwl::FilterBank;

namespace {
bool has_zero_near(const CycleSet& cs, double turns) {
  const Complex z = std::polar(1.0, 2.0 * M_PI * turns);
  for (const Complex& w : cs.zeros)
    if (std::abs(w - z) < 1e-8) return true;
  return false;
}
}  // namespace

TEST_CASE("circle_zeros") {
  SUBCASE("theta = pi/2 gives the three cube roots of unity") {
    const CycleSet cs = cwl::circle_zeros(cwl::from_theta(M_PI / 2.0).rows[0]);
    REQUIRE(cs.zeros.size() == 3);
    CHECK(has_zero_near(cs, 0.0));
    CHECK(has_zero_near(cs, 1.0 / 3.0));
    CHECK(has_zero_near(cs, 2.0 / 3.0));
  }
  SUBCASE("haar gives only z = 1") {
    const CycleSet cs = cwl::circle_zeros(cwl::haar().rows[0]);
    REQUIRE(cs.zeros.size() == 1);
    CHECK(has_zero_near(cs, 0.0));
  }
  SUBCASE("theta = 3 pi/2: roots {0, 1}, only z = 1 on the circle") {
    const CycleSet cs = cwl::circle_zeros(cwl::from_theta(3.0 * M_PI / 2.0).rows[0]);
    REQUIRE(cs.zeros.size() == 1);
    CHECK(has_zero_near(cs, 0.0));
  }
  SUBCASE("zero polynomial is rejected") {
    CHECK_THROWS_AS(cwl::circle_zeros(cwl::CoeffMap{}), std::invalid_argument);
  }
  SUBCASE("z = 1 is a zero of m0(-z) across the family") {
    for (int k = 0; k < 90; ++k) {
      const CycleSet cs =
          cwl::circle_zeros(cwl::from_theta(2.0 * M_PI * double(k) / 90.0).rows[0]);
      CHECK(has_zero_near(cs, 0.0));
    }
  }
  SUBCASE("near-circle roots are reported as borderline, not zeros") {
    // m0(z) = (z + 1.000001)(z + 2): roots of m0(-z) at 1.000001 and 2
    cwl::CoeffMap m0{{0, Complex(2.000002, 0.0)},
                     {1, Complex(3.000001, 0.0)},
                     {2, Complex(1.0, 0.0)}};
    const CycleSet cs = cwl::circle_zeros(m0);
    CHECK(cs.zeros.empty());
    REQUIRE(cs.borderline.size() == 1);
    CHECK(std::abs(cs.borderline[0] - Complex(1.000001, 0.0)) < 1e-9);
  }
}

TEST_CASE("find_cycles") {
  SUBCASE("cube roots carry the nontrivial {omega, omega^2} cycle") {
    const CycleSet zeros = cwl::circle_zeros(cwl::from_theta(M_PI / 2.0).rows[0]);
    const CycleSet cs = cwl::find_cycles(zeros, 3);
    CHECK(cs.contains_nontrivial);
    REQUIRE(cs.cycles.size() == 2);  // trivial {1} and {1/3, 2/3}
    bool found = false;
    for (const auto& cyc : cs.cycles)
      if (!cyc.trivial()) {
        REQUIRE(cyc.turns.size() == 2);
        CHECK(cyc.turns[0] == std::pair<long long, long long>{1, 3});
        CHECK(cyc.turns[1] == std::pair<long long, long long>{2, 3});
        found = true;
      }
    CHECK(found);
  }
  SUBCASE("{1} alone carries only the trivial cycle") {
    const CycleSet cs = cwl::find_cycles(cwl::circle_zeros(cwl::haar().rows[0]), 4);
    REQUIRE(cs.cycles.size() == 1);
    CHECK(cs.cycles[0].trivial());
    CHECK_FALSE(cs.contains_nontrivial);
  }
  SUBCASE("seventh roots of unity split into two length-3 cycles") {
    CycleSet zeros;
    for (int j = 0; j < 7; ++j)
      zeros.zeros.push_back(std::polar(1.0, 2.0 * M_PI * double(j) / 7.0));
    const CycleSet cs = cwl::find_cycles(zeros, 5);
    int len3 = 0;
    for (const auto& cyc : cs.cycles)
      if (cyc.turns.size() == 3) ++len3;
    CHECK(len3 == 2);
    // the two orbits are {1,2,4}/7 and {3,6,5}/7
    for (const auto& cyc : cs.cycles) {
      if (cyc.turns.size() != 3) continue;
      std::vector<long long> nums;
      for (const auto& [num, den] : cyc.turns) {
        CHECK(den == 7);
        nums.push_back(num);
      }
      std::sort(nums.begin(), nums.end());
      const bool first = nums == std::vector<long long>{1, 2, 4};
      const bool second = nums == std::vector<long long>{3, 5, 6};
      CHECK((first || second));
    }
  }
  SUBCASE("every reported cycle is closed under squaring") {
    for (double theta : {M_PI / 2.0, 0.3}) {
      const CycleSet cs =
          cwl::find_cycles(cwl::circle_zeros(cwl::from_theta(theta).rows[0]), 3);
      for (const auto& cyc : cs.cycles)
        for (std::size_t i = 0; i < cyc.points.size(); ++i) {
          const Complex sq = cyc.points[i] * cyc.points[i];
          bool member = false;
          for (const Complex& p : cyc.points)
            if (std::abs(p - sq) < 1e-8) member = true;
          CHECK(member);
        }
    }
  }
}

TEST_CASE("frame_classify") {
  CHECK(cwl::frame_classify(cwl::from_theta(M_PI / 2.0)) ==
        cwl::FrameStatus::tight_frame_only);
  CHECK(cwl::frame_classify(cwl::from_theta(7.0 * M_PI / 6.0)) ==
        cwl::FrameStatus::orthonormal_basis);
  CHECK(cwl::frame_classify(cwl::haar()) == cwl::FrameStatus::orthonormal_basis);

  FilterBank bent = cwl::from_theta(1.0);
  bent.rows[0][0] += 1e-3;
  CHECK_THROWS_AS(cwl::frame_classify(bent), std::invalid_argument);
}

TEST_CASE("frame dichotomy on a 360-point grid") {
  for (int k = 0; k < 360; ++k) {
    const double theta = 2.0 * M_PI * (double(k) / 360.0);
    const auto status = cwl::frame_classify(cwl::from_theta(theta));
    if (k == 90)
      CHECK(status == cwl::FrameStatus::tight_frame_only);
    else
      CHECK(status == cwl::FrameStatus::orthonormal_basis);
  }
}

TEST_CASE("substituted filters acquire the cycles in the (2p+1)-th roots") {
  SUBCASE("haar with p = 1 gains {omega, omega^2}") {
    const FilterBank sub = cwl::substitute_odd(cwl::haar(), 1);
    const CycleSet cs = cwl::find_cycles(cwl::circle_zeros(sub.rows[0]), 3);
    CHECK(cs.contains_nontrivial);
    CHECK(cwl::frame_classify(sub) == cwl::FrameStatus::tight_frame_only);
  }
  SUBCASE("haar with p = 2 gains the length-4 cycle in the fifth roots") {
    const FilterBank sub = cwl::substitute_odd(cwl::haar(), 2);
    const CycleSet cs = cwl::find_cycles(cwl::circle_zeros(sub.rows[0]), 5);
    bool found_len4 = false;
    for (const auto& cyc : cs.cycles)
      if (cyc.turns.size() == 4) {
        found_len4 = true;
        for (const auto& [num, den] : cyc.turns) CHECK(den == 5);
      }
    CHECK(found_len4);
    CHECK(cwl::frame_classify(sub) == cwl::FrameStatus::tight_frame_only);
  }
}
