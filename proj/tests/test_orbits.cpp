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

#include <cmath>
#include <numeric>
#include <set>

#include "astwist/arith.hpp"
#include "astwist/error.hpp"
#include "astwist/ff.hpp"
#include "astwist/orbits.hpp"

using namespace astwist;

namespace {

const std::vector<std::array<int, 3>> kGrid = {{5, 1, 1}, {5, 1, 2}, {5, 2, 1}, {7, 1, 1},
                                               {7, 1, 2}, {11, 1, 1}, {11, 2, 1}, {13, 1, 1}};

TwistParams make(const std::array<int, 3>& g) { return TwistParams::make(static_cast<u64>(g[0]), g[1], g[2]); }

// Orbit sizes from the field itself: alpha^(1/r) is inverse Frobenius applied
// nu times to an actual element of F_q.
std::multiset<int> field_orbit_sizes(const TwistParams& params, int n) {
  const int d[] = {params.f};
  const ff::Field f = ff::Field::build_tower(params.p, d);
  std::set<std::pair<int, ff::u64>> seen;
  std::multiset<int> sizes;
  for (int i = 1; i < n; ++i) {
    if (std::gcd(i, n) != 1) continue;
    for (ff::u64 idx = 1; idx < f.size(); ++idx) {
      if (seen.count({i, idx})) continue;
      int size = 0;
      int ci = i;
      ff::Element a = f.from_index(idx);
      do {
        seen.insert({ci, f.index(a)});
        ++size;
        ci = static_cast<int>((static_cast<long long>(ci) * static_cast<long long>(params.r % n)) % n);
        a = f.frobenius(a, -params.nu);
      } while (!(ci == i && f.index(a) == idx));
      sizes.insert(size);
    }
  }
  return sizes;
}

}  // namespace

TEST_SUITE("orbits") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(TwistParams::make(9, 1, 1), Error);
    CHECK_THROWS_AS(TwistParams::make(3, 1, 1), Error);
    CHECK_THROWS_AS(TwistParams::make(5, 0, 1), Error);
    const auto p = TwistParams::make(11, 2, 1);
    CHECK(p.r == 121);
    CHECK(p.q == 11);
    CHECK(p.supersingular());
    CHECK(p.r_mod6() == 1);
  }

  TEST_CASE("orbits at (5,1,1)") {
    const auto params = TwistParams::make(5, 1, 1);
    const auto orbits = enumerate_orbits(params, 6, true);
    REQUIRE(orbits.size() == 4);
    for (const Orbit& o : orbits) {
      CHECK(o.size == 2);
      CHECK(o.elements[0].i == 1);
      CHECK(o.elements[1].i == 5);
      CHECK(o.elements[0].j == o.elements[1].j);
      const auto m = multipliers(params, o);
      CHECK(m.m2 == 2);
      CHECK(m.n6 == 1);
      CHECK(project(params, o, 2).size == 1);
      CHECK(conjugate_orbit(params, o).rep == o.rep);
    }
  }

  TEST_CASE("vertical orbits when r = 1 mod 6") {
    const auto params = TwistParams::make(7, 1, 2);
    for (const Orbit& o : enumerate_orbits(params, 6, true)) {
      if (o.alpha_degree == 1) CHECK(o.size == 1);
      CHECK(multipliers(params, o).m2 == 1);
      CHECK(multipliers(params, o).n6 == o.size);
    }
    const auto p7 = TwistParams::make(7, 1, 1);
    for (const Orbit& o : enumerate_orbits(p7, 6, true)) {
      const Orbit c = conjugate_orbit(p7, o);
      CHECK(c.rep != o.rep);
      CHECK(c.size == o.size);
    }
  }

  TEST_CASE("grid properties") {
    for (const auto& g : kGrid) {
      const auto params = make(g);
      CAPTURE(g[0]);
      CAPTURE(g[1]);
      CAPTURE(g[2]);
      const auto qm1 = params.q - 1;
      for (int n : {2, 3, 6}) {
        const auto orbits = enumerate_orbits(params, n, true);
        std::set<OrbitPoint> all;
        u64 total = 0;
        for (const Orbit& o : orbits) {
          total += static_cast<u64>(o.size);
          CHECK(o.rep == *std::min_element(o.elements.begin(), o.elements.end()));
          CHECK(o.size == orbit_size_formula(params, n, o.rep));
          for (const auto& e : o.elements) CHECK(all.insert(e).second);
          const int bound = static_cast<int>(
              std::lcm(static_cast<u64>(arith::multiplicative_order(params.r % static_cast<u64>(n), static_cast<u64>(n))),
                       static_cast<u64>(std::lcm(params.f, params.nu) / params.nu)));
          CHECK(bound % o.size == 0);
        }
        CHECK(total == arith::euler_phi(static_cast<u64>(n)) * qm1);

        std::multiset<int> sizes;
        for (const Orbit& o : orbits) sizes.insert(o.size);
        CHECK(sizes == field_orbit_sizes(params, n));
      }

      const auto orbits6 = enumerate_orbits(params, 6, true);
      const auto orbits3 = enumerate_orbits(params, 3, true);
      std::set<OrbitPoint> images;
      for (const Orbit& o : orbits6) {
        if (params.p % 6 == 5) CHECK((params.nu * o.size) % 2 == 0);
        images.insert(project(params, o, 3).rep);
        const Orbit c = conjugate_orbit(params, o);
        CHECK(conjugate_orbit(params, c).rep == o.rep);
        CHECK(multipliers(params, c).n6 == multipliers(params, o).n6);
        const auto m = multipliers(params, o);
        CHECK((m.m2 == 1 || m.m2 == 2));
        CHECK(m.n6 == (params.r % 6 == 1 ? o.size : o.size / 2));
      }
      CHECK(images.size() == orbits6.size());
      CHECK(orbits3.size() == orbits6.size());

      const auto orbits2 = enumerate_orbits(params, 2, true);
      if (params.r % 6 == 1) CHECK(orbits6.size() == 2 * orbits2.size());
    }
  }

  TEST_CASE("nu |o| can be odd when p = 1 mod 6") {
    const auto params = TwistParams::make(7, 1, 1);
    const auto orbits = enumerate_orbits(params, 6, true);
    CHECK(std::any_of(orbits.begin(), orbits.end(), [](const Orbit& o) { return o.size % 2 == 1; }));
  }

  TEST_CASE("N_{r,6}") {
    CHECK(n_orbits(TwistParams::make(7, 1, 1)).size() == 2);
    CHECK(n_orbits(TwistParams::make(5, 2, 1)).size() == 2);
    CHECK(n_orbits(TwistParams::make(5, 1, 1)).size() == 1);
  }

  TEST_CASE("S including non-units") {
    const auto params = TwistParams::make(5, 1, 2);
    u64 total = 0;
    for (const Orbit& o : enumerate_orbits(params, 6, false)) total += static_cast<u64>(o.size);
    CHECK(total == 5 * 24);
  }

  TEST_CASE("enumeration cap") {
    const auto params = TwistParams::make(5, 1, 3);
    CHECK_THROWS_AS(enumerate_orbits(params, 6, true, 100), Error);
  }
}
