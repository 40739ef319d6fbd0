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

#include "astwist/context.hpp"
#include "astwist/error.hpp"
#include "astwist/lfunction.hpp"
#include "astwist/oracle.hpp"

using namespace astwist;

namespace {

// F_25 = F_5[x]/(x^2 - 3), elements a + b x, written out by hand.
struct F25 {
  int a, b;
};
F25 add(F25 u, F25 v) { return {(u.a + v.a) % 5, (u.b + v.b) % 5}; }
F25 sub(F25 u, F25 v) { return {(u.a - v.a + 5) % 5, (u.b - v.b + 5) % 5}; }
F25 mul(F25 u, F25 v) { return {(u.a * v.a + 3 * u.b * v.b) % 5, (u.a * v.b + u.b * v.a) % 5}; }
F25 power(F25 u, int e) {
  F25 out{1, 0};
  for (int k = 0; k < e; ++k) out = mul(out, u);
  return out;
}
int lambda(F25 u) {
  if (u.a == 0 && u.b == 0) return 0;
  const F25 v = power(u, 12);
  return v.a == 1 ? 1 : -1;
}

long hand_count_c2() {
  long c = 0;
  for (int t = 0; t < 25; ++t) {
    const F25 tt{t % 5, t / 5};
    const F25 u = sub(power(tt, 5), tt);
    for (int x = 0; x < 25; ++x) {
      const F25 xx{x % 5, x / 5};
      c += lambda(add(power(xx, 3), u));
    }
  }
  return c;
}

long hand_count_c1(int p) {
  long c = 0;
  for (int t = 0; t < p; ++t) {
    for (int x = 0; x < p; ++x) {
      const long v = (static_cast<long>(x) * x * x) % p;  // t^q - t = 0 on F_p
      if (v == 0) continue;
      long e = 1;
      for (int k = 0; k < (p - 1) / 2; ++k) e = e * v % p;
      c += e == 1 ? 1 : -1;
    }
  }
  return c;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("hand-written field count") {
    CHECK(hand_count_c2() == -200);
    CHECK(hand_count_c1(5) == 0);
  }

  TEST_CASE("first coefficients at (5,1,1)") {
    const auto params = TwistParams::make(5, 1, 1);
    CHECK(oracle_coefficient(params, 1, OraclePath::Transform, 10'000'000) == 0);
    CHECK(oracle_coefficient(params, 2, OraclePath::Transform, 10'000'000) == hand_count_c2());
    CHECK(oracle_coefficient(params, 2, OraclePath::Naive, 100'000) == -200);
  }

  TEST_CASE("c_1 over the prime field") {
    for (int p : {7, 11, 13}) {
      const auto params = TwistParams::make(static_cast<u64>(p), 1, 1);
      CHECK(oracle_coefficient(params, 1, OraclePath::Naive, 100'000) == hand_count_c1(p));
      CHECK(oracle_coefficient(params, 1, OraclePath::Transform, 100'000) == hand_count_c1(p));
    }
  }

  TEST_CASE("oracle prefixes match the orbit polynomial") {
    struct Case {
      u64 p;
      int nu, f, n;
    };
    for (const Case c : {Case{5, 1, 1, 6}, Case{7, 1, 1, 4}, Case{5, 1, 2, 4}, Case{5, 2, 1, 3}, Case{11, 1, 1, 3},
                         Case{13, 1, 1, 3}}) {
      const auto params = TwistParams::make(c.p, c.nu, c.f);
      CAPTURE(c.p);
      CAPTURE(c.nu);
      CAPTURE(c.f);
      const TwistContext ctx(params);
      const auto expect = taylor_from_poly(l_poly_orbit(ctx), c.n);
      CHECK(taylor_oracle(params, c.n, OraclePath::Transform, 10'000'000) == expect);
    }
  }

  TEST_CASE("naive and transform paths agree") {
    const auto params = TwistParams::make(7, 1, 1);
    CHECK(taylor_oracle(params, 2, OraclePath::Naive, 100'000) ==
          taylor_oracle(params, 2, OraclePath::Transform, 100'000));
    const auto p2 = TwistParams::make(5, 1, 2);
    CHECK(taylor_oracle(p2, 3, OraclePath::Naive, 100'000) == taylor_oracle(p2, 3, OraclePath::Transform, 100'000));
  }

  TEST_CASE("cap") {
    const auto params = TwistParams::make(5, 1, 1);
    try {
      oracle_coefficient(params, 4, OraclePath::Transform, 100);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::CapExceeded);
    }
  }
}
