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

#include <map>
#include <random>
#include <set>

#include "astwist/arith.hpp"
#include "astwist/error.hpp"
#include "astwist/ff.hpp"

using namespace astwist;
using ff::Element;
using ff::Field;

namespace {

Field tower(ff::u64 p, std::initializer_list<int> degs) {
  std::vector<int> d(degs);
  return Field::build_tower(p, d);
}

}  // namespace

TEST_SUITE("ff") {
  TEST_CASE("prime field F_5 has a verified generator") {
    const Field f = tower(5, {1});
    CHECK(f.size() == 5);
    const auto g = f.generator().c[0];
    CHECK((g == 2 || g == 3));
    CHECK(f.order(f.generator()) == 4);
  }

  TEST_CASE("F_25 contains F_5 as the Frobenius fixed points") {
    const Field f = tower(5, {1, 2});
    CHECK(f.degree() == 2);
    int fixed = 0;
    for (ff::u64 i = 0; i < f.size(); ++i) {
      const Element x = f.from_index(i);
      if (f.frobenius(x, 1) == x) {
        ++fixed;
        CHECK(f.contains(x, 1));
      }
    }
    CHECK(fixed == 5);
  }

  TEST_CASE("F_343 embeds F_7 as x^7 = x") {
    const Field f = tower(7, {1, 3});
    int fixed = 0;
    for (ff::u64 i = 0; i < f.size(); ++i) {
      const Element x = f.from_index(i);
      if (f.pow(x, 7) == x) ++fixed;
    }
    CHECK(fixed == 7);
  }

  TEST_CASE("modulus is irreducible and minimal") {
    for (ff::u64 p : {5, 7, 11, 13}) {
      for (int k : {1, 2, 3, 4}) {
        const auto m = ff::smallest_irreducible(p, k);
        CHECK(ff::is_irreducible(p, m));
      }
    }
    // x^2 + 2 is the first irreducible quadratic over F_5 in index order
    const auto m = ff::smallest_irreducible(5, 2);
    CHECK(m == std::vector<std::uint32_t>{2, 0, 1});
    // x^2 + 1 is reducible over F_5 (2^2 = -1)
    const std::uint32_t red[] = {1, 0, 1};
    CHECK_FALSE(ff::is_irreducible(5, red));
  }

  TEST_CASE("frobenius") {
    const Field f = tower(5, {2});
    const Element g = f.generator();
    CHECK(f.frobenius(g, 0) == g);
    CHECK(f.frobenius(g, 2) == g);
    CHECK(f.frobenius(g, 1) == f.pow(g, 5));
    CHECK(f.frobenius(g, 1) != g);
    CHECK(f.frobenius(f.frobenius(g, 1), -1) == g);
  }

  TEST_CASE("frobenius is a field automorphism") {
    const Field f = tower(7, {6});
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
      const Element a = f.from_index(rng() % f.size());
      const Element b = f.from_index(rng() % f.size());
      CHECK(f.frobenius(f.add(a, b), 1) == f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
      CHECK(f.frobenius(f.mul(a, b), 1) == f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
    }
  }

  TEST_CASE("trace and norm") {
    const Field f = tower(5, {1, 2});
    std::map<ff::u64, int> fibers;
    for (ff::u64 i = 0; i < f.size(); ++i) {
      const Element x = f.from_index(i);
      const auto [tr, nm] = f.trace_norm(x, 1);
      CHECK(f.contains(tr, 1));
      CHECK(f.contains(nm, 1));
      CHECK(tr.c[0] == f.absolute_trace(x, 2));
      ++fibers[tr.c[0]];
    }
    CHECK(fibers.size() == 5);
    for (const auto& [t, n] : fibers) CHECK(n == 5);

    const Element three = f.from_int(3);
    const auto [tr3, nm3] = f.trace_norm(three, 1);
    CHECK(tr3 == f.from_int(6));
    CHECK(nm3 == f.from_int(9));
    CHECK_THROWS_AS(f.trace_norm(three, 3), Error);
  }

  TEST_CASE("trace and norm match accumulated Frobenius up to 5^6") {
    const Field f = tower(5, {6});
    std::mt19937_64 rng(5);
    for (int sub : {1, 2, 3}) {
      for (int t = 0; t < 60; ++t) {
        const Element x = f.from_index(rng() % f.size());
        const auto [tr, nm] = f.trace_norm(x, sub);
        Element acc_t = f.zero(), acc_n = f.one(), y = x;
        for (int j = 0; j < 6 / sub; ++j) {
          acc_t = f.add(acc_t, y);
          acc_n = f.mul(acc_n, y);
          for (int s = 0; s < sub; ++s) y = f.pow(y, 5);
        }
        CHECK(tr == acc_t);
        CHECK(nm == acc_n);
      }
    }
  }

  TEST_CASE("trace is additive and norm multiplicative") {
    const Field f = tower(11, {4});
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
      const Element a = f.from_index(rng() % f.size());
      const Element b = f.from_index(rng() % f.size());
      const auto [ta, na] = f.trace_norm(a, 2);
      const auto [tb, nb] = f.trace_norm(b, 2);
      CHECK(f.trace_norm(f.add(a, b), 2).first == f.add(ta, tb));
      CHECK(f.trace_norm(f.mul(a, b), 2).second == f.mul(na, nb));
    }
  }

  TEST_CASE("dlog") {
    const Field f5 = tower(5, {1});
    CHECK(f5.dlog(f5.one()) == 0);
    CHECK(f5.dlog(f5.generator()) == 1);
    CHECK(f5.generator().c[0] == 2);
    CHECK(f5.dlog(f5.from_int(4)) == 2);
    CHECK_THROWS_AS(f5.dlog(f5.zero()), Error);

    const Field f = tower(7, {6});
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
      const Element a = f.from_index(1 + rng() % (f.size() - 1));
      const Element b = f.from_index(1 + rng() % (f.size() - 1));
      const auto n = f.unit_order();
      CHECK(f.dlog(f.mul(a, b)) == (f.dlog(a) + f.dlog(b)) % n);
      CHECK(f.dlog_pohlig_hellman(a) == f.dlog(a));
      CHECK(f.pow(f.generator(), f.dlog(a)) == a);
    }
  }

  TEST_CASE("dlog without tables on a large field") {
    ff::TowerOptions opt;
    opt.table_cap = 0;
    const int d[] = {8};
    const Field f = Field::build_tower(13, d, opt);
    CHECK_FALSE(f.has_log_table());
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
      const ff::u64 e = rng() % f.unit_order();
      CHECK(f.dlog(f.pow(f.generator(), e)) == e);
    }
  }

  TEST_CASE("generator has exact order on every subfield") {
    const Field f = tower(5, {6});
    for (int k : f.subfield_degrees()) {
      const auto& sf = f.subfield(k);
      CHECK(f.order(sf.generator) == sf.size - 1);
      CHECK(f.contains(sf.generator, k));
    }
  }

  TEST_CASE("cubes") {
    const Field f = tower(5, {1, 2});
    int cubes = 0;
    for (ff::u64 i = 1; i < f.size(); ++i)
      if (f.is_cube(f.from_index(i), 2)) ++cubes;
    CHECK(cubes == 8);
    for (ff::u64 i = 1; i < 5; ++i) CHECK(f.is_cube(f.from_int(static_cast<int>(i)), 1));
    CHECK(f.is_cube(f.one(), 2));
    CHECK_THROWS_AS(f.is_cube(f.zero(), 2), Error);
  }

  TEST_CASE("construction errors") {
    const int d1[] = {1};
    CHECK_THROWS_AS(Field::build_tower(9, d1), Error);
    try {
      Field::build_tower(9, d1);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonPrime);
    }
    ff::TowerOptions small;
    small.ambient_cap = 100;
    const int d3[] = {3};
    try {
      Field::build_tower(5, d3, small);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::CapExceeded);
    }
    CHECK_THROWS_AS(Field::build_tower(3, d1), Error);
  }

  TEST_CASE("generator rank picks a different generator") {
    ff::TowerOptions o;
    o.generator_rank = 1;
    const int d[] = {2};
    const Field a = Field::build_tower(5, d);
    const Field b = Field::build_tower(5, d, o);
    CHECK(a.generator() != b.generator());
    CHECK(b.order(b.generator()) == 24);
  }

  TEST_CASE("arith helpers") {
    CHECK(arith::is_prime(2305843009213693951ULL));
    CHECK_FALSE(arith::is_prime(3215031751ULL));
    const auto fac = arith::factorize(5ULL * 5 * 7 * 1000003ULL);
    CHECK(fac == std::vector<std::pair<arith::u64, int>>{{5, 2}, {7, 1}, {1000003, 1}});
    CHECK(arith::multiplicative_order(7, 36) == 6);
    CHECK(arith::checked_pow(5, 30, 1000) == 0);
    CHECK(arith::euler_phi(30) == 8);
    CHECK(arith::mobius(30) == -1);
  }
}
