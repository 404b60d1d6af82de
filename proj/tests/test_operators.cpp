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

#include <random>

#include "cwl/isometries.hpp"
#include "cwl/json_io.hpp"
#include "cwl/operators.hpp"
#include "cwl/subband.hpp"

using cwl::Complex;
using cwl::FilterBank;
using cwl::TrigPoly;

namespace {
TrigPoly e(int n) { return cwl::monomial(n); }

TrigPoly combine(Complex c0, const TrigPoly& p0, Complex c1, const TrigPoly& p1) {
  TrigPoly out;
  cwl::add_scaled(out, c0, p0);
  cwl::add_scaled(out, c1, p1);
  return out;
}
}  // namespace

TEST_CASE("apply_S at the singular points") {
  const double r = 1.0 / std::sqrt(2.0);
  SUBCASE("theta = 3 pi/2: S0 e_n = (e_{1+2n} + e_{2+2n})/sqrt2") {
    const FilterBank bank = cwl::from_theta(3.0 * M_PI / 2.0);
    for (int n : {-3, 0, 2}) {
      const TrigPoly got = cwl::apply_S(bank, 0, e(n));
      const TrigPoly want = combine(r, e(1 + 2 * n), r, e(2 + 2 * n));
      CHECK(cwl::distance(got, want) < 1e-15);
    }
  }
  SUBCASE("theta = pi/2: S0 e_n = (e_{2n} + e_{3+2n})/sqrt2") {
    const FilterBank bank = cwl::from_theta(M_PI / 2.0);
    for (int n : {-2, 0, 5}) {
      const TrigPoly got = cwl::apply_S(bank, 0, e(n));
      const TrigPoly want = combine(r, e(2 * n), r, e(3 + 2 * n));
      CHECK(cwl::distance(got, want) < 1e-15);
    }
  }
  SUBCASE("zero polynomial maps to zero") {
    CHECK(cwl::apply_S(cwl::haar(), 0, TrigPoly{}).empty());
    CHECK(cwl::apply_S_star(cwl::haar(), 1, TrigPoly{}).empty());
  }
}

TEST_CASE("apply_S_star") {
  SUBCASE("haar diagonal action") {
    const TrigPoly got = cwl::apply_S_star(cwl::haar(), 0, e(0));
    CHECK(cwl::distance(got, {{0, Complex(1.0 / std::sqrt(2.0), 0.0)}}) < 1e-15);
  }
  SUBCASE("adjoint defining property on random monomials") {
    std::mt19937 rng(3u);
    std::uniform_int_distribution<int> pick(-12, 12);
    const FilterBank bank = cwl::from_theta(2.1);
    for (int t = 0; t < 40; ++t) {
      const int n = pick(rng), m = pick(rng);
      for (int j = 0; j < 2; ++j) {
        const Complex lhs = cwl::inner(e(m), cwl::apply_S_star(bank, j, e(n)));
        const Complex rhs = cwl::inner(cwl::apply_S(bank, j, e(m)), e(n));
        CHECK(std::abs(lhs - std::conj(rhs)) < 1e-15);
      }
    }
  }
  SUBCASE("the correlation space is invariant") {
    const FilterBank bank = cwl::from_theta(7.0 * M_PI / 6.0);
    for (int n = -3; n <= 0; ++n)
      for (int j = 0; j < 2; ++j)
        for (const auto& [m, c] : cwl::apply_S_star(bank, j, e(n))) {
          CHECK(m >= -3);
          CHECK(m <= 0);
        }
  }
}

TEST_CASE("adjointness on random polynomials") {
  std::mt19937_64 rng(17u);
  const FilterBank bank = cwl::from_theta(0.9);
  for (int t = 0; t < 20; ++t) {
    const TrigPoly xi = cwl::random_trig_poly(rng, 15);
    const TrigPoly eta = cwl::random_trig_poly(rng, 15);
    for (int j = 0; j < 2; ++j) {
      const Complex lhs = cwl::inner(cwl::apply_S_star(bank, j, xi), eta);
      const Complex rhs = cwl::inner(xi, cwl::apply_S(bank, j, eta));
      CHECK(std::abs(lhs - rhs) < 1e-13);
    }
  }
}

TEST_CASE("compression to H reproduces the isometry matrices") {
  for (double theta : {7.0 * M_PI / 6.0, 1.3, 4.4}) {
    const FilterBank bank = cwl::from_theta(theta);
    const cwl::IsometrySystem sys = cwl::build_V(bank);
    const auto& H = sys.space.exponents;
    for (int j = 0; j < 2; ++j)
      for (int cidx = 0; cidx < sys.dim(); ++cidx) {
        const TrigPoly image = cwl::apply_S_star(bank, j, e(H[std::size_t(cidx)]));
        for (int ridx = 0; ridx < sys.dim(); ++ridx) {
          const Complex entry = cwl::coeff_at(image, H[std::size_t(ridx)]);
          CHECK(std::abs(entry - sys.v_star[std::size_t(j)](ridx, cidx)) <= 1e-15);
        }
      }
  }
}

TEST_CASE("settle_length") {
  const FilterBank bank = cwl::from_theta(7.0 * M_PI / 6.0);
  SUBCASE("exponents already in H settle immediately") {
    for (int n = -3; n <= 0; ++n) CHECK(cwl::settle_length(bank, n) == 0);
  }
  SUBCASE("agrees with exhaustive word enumeration at n = 10") {
    const int M = cwl::settle_length(bank, 10);
    CHECK(M > 0);
    // oracle: apply every adjoint word of length M (and M-1) explicitly
    auto words_settle = [&](int len) {
      for (int mask = 0; mask < (1 << len); ++mask) {
        TrigPoly cur = e(10);
        for (int i = 0; i < len; ++i)
          cur = cwl::apply_S_star(bank, (mask >> i) & 1, cur);
        for (const auto& [m, c] : cur)
          if (m < -3 || m > 0) return false;
      }
      return true;
    };
    CHECK(words_settle(M));
    CHECK_FALSE(words_settle(M - 1));
  }
  SUBCASE("reach sets obey the contraction bound") {
    // after m adjoint letters every exponent x satisfies
    // |x| <= 2^-m |n| + r with r = (||N^-1|| / (1 - ||N^-1||)) max|p| = 2d - 1
    const double r = 3.0;
    for (int n : {4, 7, 10, 100, -10, -37})
      for (int m = 0; m <= 10; ++m)
        for (int x : cwl::reach_exponents(bank, n, m))
          CHECK(std::abs(double(x)) <= std::ldexp(std::abs(double(n)), -m) + r);
    // which caps the settle length at floor(log2 |n|) + 1 ball steps plus
    // the drain from the ball into H
    for (int n : {4, 7, 10, 100, -10, -37})
      CHECK(cwl::settle_length(bank, n) <=
            int(std::floor(std::log2(std::abs(double(n))))) + 3);
  }
  SUBCASE("the search aborts at the depth cap") {
    CHECK_THROWS_AS(cwl::settle_length(bank, 1 << 20, /*max_depth=*/5),
                    std::runtime_error);
  }
}

TEST_CASE("verify_cuntz") {
  for (double theta : {0.4, 7.0 * M_PI / 6.0, 5.1})
    CHECK(cwl::verify_cuntz(cwl::from_theta(theta), 50, 20) < 1e-12);
  CHECK(cwl::verify_cuntz(cwl::haar(), 20, 10) < 1e-14);

  FilterBank bent = cwl::from_theta(1.7);
  bent.rows[0][1] += 1e-4;
  const double res = cwl::verify_cuntz(bent, 20, 10);
  CHECK(res > 1e-6);
  CHECK(res < 1e-2);
}

TEST_CASE("haar transform identities") {
  // (S0 + S1)/sqrt2 and (S0 - S1)/sqrt2 act as xi(z^2) and z xi(z^2)
  const FilterBank h = cwl::haar();
  const double r = 1.0 / std::sqrt(2.0);
  for (int n : {-4, 0, 3}) {
    const TrigPoly t0 = combine(r, cwl::apply_S(h, 0, e(n)), r, cwl::apply_S(h, 1, e(n)));
    CHECK(cwl::distance(t0, e(2 * n)) < 1e-15);
    const TrigPoly t1 = combine(r, cwl::apply_S(h, 0, e(n)), -r, cwl::apply_S(h, 1, e(n)));
    CHECK(cwl::distance(t1, e(1 + 2 * n)) < 1e-15);
  }
}

TEST_CASE("theta = 3 pi/2 transform identities") {
  // (S0 - S1)/sqrt2 e_n = e_{1+2n} and (S0 + S1)/sqrt2 e_n = e_{2+2n}
  const FilterBank bank = cwl::from_theta(3.0 * M_PI / 2.0);
  const double r = 1.0 / std::sqrt(2.0);
  for (int n : {-5, 0, 2}) {
    const TrigPoly d = combine(r, cwl::apply_S(bank, 0, e(n)), -r, cwl::apply_S(bank, 1, e(n)));
    CHECK(cwl::distance(d, e(1 + 2 * n)) < 1e-15);
    const TrigPoly s = combine(r, cwl::apply_S(bank, 0, e(n)), r, cwl::apply_S(bank, 1, e(n)));
    CHECK(cwl::distance(s, e(2 + 2 * n)) < 1e-15);
  }
}

TEST_CASE("reflection operator W") {
  CHECK(cwl::distance(cwl::reflect_W(e(0), 3), e(-3)) == 0.0);

  std::mt19937_64 rng(23u);
  std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
  for (int t = 0; t < 20; ++t) {
    const double theta = unif(rng);
    const FilterBank bank = cwl::from_theta(theta);
    const FilterBank mirrored = cwl::from_theta(M_PI - theta);
    const TrigPoly xi = cwl::random_trig_poly(rng, 10);
    // W S0 = S0' W and W S1 = -S1' W
    const TrigPoly lhs0 = cwl::reflect_W(cwl::apply_S(bank, 0, xi), 3);
    const TrigPoly rhs0 = cwl::apply_S(mirrored, 0, cwl::reflect_W(xi, 3));
    CHECK(cwl::distance(lhs0, rhs0) < 1e-13);
    const TrigPoly lhs1 = cwl::reflect_W(cwl::apply_S(bank, 1, xi), 3);
    TrigPoly rhs1;
    cwl::add_scaled(rhs1, Complex(-1.0, 0.0), cwl::apply_S(mirrored, 1, cwl::reflect_W(xi, 3)));
    CHECK(cwl::distance(lhs1, rhs1) < 1e-13);
  }
}

TEST_CASE("intertwiner U between the singular points") {
  CHECK(cwl::distance(cwl::intertwiner_U(e(-1)), e(-3)) == 0.0);
  CHECK(cwl::distance(cwl::intertwiner_U(e(-2)), e(0)) == 0.0);

  const FilterBank threehalf = cwl::from_theta(3.0 * M_PI / 2.0);
  const FilterBank half = cwl::from_theta(M_PI / 2.0);
  for (int n = -10; n <= 10; ++n)
    for (int i = 0; i < 2; ++i) {
      const TrigPoly lhs = cwl::intertwiner_U(cwl::apply_S(threehalf, i, e(n)));
      const TrigPoly rhs = cwl::apply_S(half, i, cwl::intertwiner_U(e(n)));
      CHECK(cwl::distance(lhs, rhs) < 1e-14);
    }
}

TEST_CASE("trig polynomials round-trip through JSON") {
  std::mt19937_64 rng(31u);
  TrigPoly p = cwl::random_trig_poly(rng, 6);
  p[-9] = Complex(0.25, -1.5);
  const TrigPoly back = cwl::trig_poly_from_json(cwl::trig_poly_to_json(p));
  CHECK(back == p);
}

TEST_CASE("subband analysis and synthesis") {
  SUBCASE("perfect reconstruction of random signals") {
    std::mt19937_64 rng(29u);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int t = 0; t < 10; ++t) {
      const FilterBank bank = cwl::from_theta(angle(rng));
      for (int s = 0; s < 10; ++s) {
        cwl::Signal x;
        for (int n = 0; n < 64; ++n) x[n] = Complex(unif(rng), unif(rng));
        const cwl::Signal back = cwl::subband_synthesize(bank, cwl::subband_analyze(bank, x));
        CHECK(cwl::distance(back, x) < 1e-12);
      }
    }
  }
  SUBCASE("delta through haar") {
    const cwl::Signal delta{{0, Complex(1.0, 0.0)}};
    const auto bands = cwl::subband_analyze(cwl::haar(), delta);
    REQUIRE(bands.size() == 2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(cwl::distance(bands[0], {{0, Complex(r, 0.0)}}) < 1e-15);
    CHECK(cwl::distance(bands[1], {{0, Complex(r, 0.0)}}) < 1e-15);
    CHECK(cwl::distance(cwl::subband_synthesize(cwl::haar(), bands), delta) < 1e-15);
  }
  SUBCASE("zero signal stays zero") {
    const auto bands = cwl::subband_analyze(cwl::haar(), {});
    CHECK(bands[0].empty());
    CHECK(bands[1].empty());
    CHECK(cwl::subband_synthesize(cwl::haar(), bands).empty());
  }
  SUBCASE("band count mismatch is rejected") {
    CHECK_THROWS_AS(cwl::subband_synthesize(cwl::haar(), {cwl::Signal{}}),
                    std::invalid_argument);
  }
}
