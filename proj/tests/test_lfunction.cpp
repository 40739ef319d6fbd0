/*
   Copyright 2026 The astwist Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <doctest.h>

#include <array>

#include "astwist/context.hpp"
#include "astwist/lfunction.hpp"

using namespace astwist;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Coefficients of (1 + c T^2)^k expanded by the binomial theorem.
std::vector<mpz_class> binomial_even(long c, int k) {
  std::vector<mpz_class> out(static_cast<std::size_t>(2 * k + 1), 0);
  mpz_class binom = 1, cp = 1;
  for (int i = 0; i <= k; ++i) {
    out[static_cast<std::size_t>(2 * i)] = binom * cp;
    binom = binom * (k - i) / (i + 1);
    cp *= c;
  }
  return out;
}

struct Frozen {
  std::array<int, 3> point;
  int rank;
  const char* lstar;
};

// rank and L* from the orbit construction, cross-checked against the point
// count oracle on the prefix that determines L through the functional equation.
const Frozen kFrozen[] = {
    {{5, 1, 1}, 0, "16"},        {{5, 1, 2}, 4, "20736"},          {{5, 2, 1}, 0, "256"},
    {{7, 1, 1}, 0, "1/7"},       {{7, 1, 2}, 0, "531441/5764801"}, {{11, 1, 1}, 10, "1024"},
    {{11, 2, 1}, 20, "1"},       {{13, 1, 1}, 0, "729/169"},
};

}  // namespace

TEST_SUITE("lfunction") {
  TEST_CASE("L at (5,1,1) is (1 + 25 T^2)^4") {
    const TwistContext ctx(TwistParams::make(5, 1, 1));
    const auto L = l_poly_orbit(ctx);
    CHECK(L.coeffs == ints({1, 0, 100, 0, 3750, 0, 62500, 0, 390625}));
    CHECK(L.coeffs == binomial_even(25, 4));
    CHECK(l_poly_sextic(ctx) == L);
    CHECK(analytic_rank(L) == 0);
    CHECK(special_value(L) == 16);
    const auto part = orbit_partition(as_factors(ctx));
    CHECK(part.unitary.empty());
    CHECK(part.non_unitary.size() == 4);
    const auto c = taylor_from_poly(L, 4);
    CHECK(c == ints({0, -200, 0, 5000}));
  }

  TEST_CASE("full rank case (11,2,1)") {
    const TwistContext ctx(TwistParams::make(11, 2, 1));
    const auto L = l_poly_orbit(ctx);
    // (1 - 121 T)^20
    mpz_class binom = 1, rp = 1;
    REQUIRE(L.degree() == 20);
    for (int k = 0; k <= 20; ++k) {
      CHECK(L.coeffs[static_cast<std::size_t>(k)] == (k % 2 ? -1 : 1) * binom * rp);
      binom = binom * (20 - k) / (k + 1);
      rp *= 121;
    }
    CHECK(analytic_rank(L) == 20);
    CHECK(special_value(L) == 1);
    CHECK(orbit_partition(as_factors(ctx)).unitary.size() == 20);
  }

  TEST_CASE("both constructions on the grid") {
    for (const auto& fz : kFrozen) {
      const auto params = TwistParams::make(static_cast<u64>(fz.point[0]), fz.point[1], fz.point[2]);
      CAPTURE(params.p);
      CAPTURE(params.nu);
      CAPTURE(params.f);
      const TwistContext ctx(params);
      const auto asf = as_factors(ctx);
      const auto stf = st_factors(ctx);
      const auto L = expand(params, ctx.conductor(), asf);
      CHECK(L == expand(params, ctx.conductor(), stf));
      CHECK(static_cast<u64>(L.degree()) == 2 * (params.q - 1));
      CHECK(L.coeffs[0] == 1);
      CHECK(functional_equation_sign(L) != 0);
      CHECK(weil_deviation(asf, params.r) < 1e-9L);
      CHECK(weil_deviation(stf, params.r) < 1e-9L);
      CHECK(analytic_rank(L) == fz.rank);
      mpq_class expect(fz.lstar);
      expect.canonicalize();
      CHECK(special_value(L) == expect);
      CHECK(orbit_partition(asf).unitary.size() == static_cast<std::size_t>(fz.rank));
      if (params.p % 6 == 1) CHECK(fz.rank == 0);

      // the sextic factor at o' equals the orbit factor at o
      for (const auto& a : asf) {
        const Orbit oc = conjugate_orbit(params, a.orbit);
        bool found = false;
        for (const auto& s : stf) {
          if (s.orbit.rep != oc.rep) continue;
          found = true;
          CHECK(s.omega == a.omega);
        }
        CHECK(found);
      }
    }
  }

  TEST_CASE("p = 7 gives a degree-12 polynomial") {
    const TwistContext ctx(TwistParams::make(7, 1, 1));
    const auto L = l_poly_orbit(ctx);
    CHECK(L.degree() == 12);
    CHECK(l_poly_sextic(ctx) == L);
  }

  TEST_CASE("choice independence") {
    for (const auto& pt : {std::array<int, 3>{5, 1, 1}, std::array<int, 3>{7, 1, 1}}) {
      const auto params = TwistParams::make(static_cast<u64>(pt[0]), pt[1], pt[2]);
      const TwistContext base(params);
      const TwistContext other(params, Caps{}, Choices{1, 2});
      CHECK(other.field().generator() != base.field().generator());
      CHECK(l_poly_orbit(other) == l_poly_orbit(base));
      CHECK(l_poly_sextic(other) == l_poly_orbit(base));
      CHECK(digest(l_poly_orbit(other)) == digest(l_poly_orbit(base)));
    }
  }

  TEST_CASE("rank and special value on synthetic polynomials") {
    LPolynomial L;
    L.params = TwistParams::make(5, 1, 1);
    // (1 - 5T)^2 (1 + 2T) = 1 - 8T + 5T^2 + 50T^3
    L.coeffs = ints({1, -8, 5, 50});
    CHECK(analytic_rank(L) == 2);
    CHECK(special_value(L) == mpq_class(7, 5));
    L.coeffs = ints({1, 3});
    CHECK(analytic_rank(L) == 0);
    CHECK(special_value(L) == mpq_class(8, 5));
  }

  TEST_CASE("digest is stable") {
    LPolynomial L;
    L.params = TwistParams::make(5, 1, 1);
    L.coeffs = ints({1, 0, 100, 0, 3750, 0, 62500, 0, 390625});
    const auto d = digest(L);
    CHECK(d.size() == 16);
    L.coeffs[2] = 101;
    CHECK(digest(L) != d);
  }
}
