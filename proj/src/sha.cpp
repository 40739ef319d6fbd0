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


#include "astwist/sha.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "astwist/arith.hpp"
#include "astwist/char_sums.hpp"
#include "astwist/error.hpp"

namespace astwist {

namespace {

void require_supersingular(const TwistParams& params) {
  if (params.p % 6 != 5) throw Error(ErrorKind::WrongResidue, "needs p = 5 mod 6");
}

std::size_t slot(const TwistParams& params, const ShaIndex& x) {
  return static_cast<std::size_t>(x.b == 1 ? 0 : 1) * (params.q - 1) + (x.a - 1);
}

}  // namespace

bool in_s0(const TwistParams& params, const ShaIndex& x) { return x.b == 1 && 6 * x.a < params.q; }

bool in_s1(const TwistParams& params, const ShaIndex& x) { return x.b == 5 && 6 * x.a > 5 * params.q && x.a < params.q; }

ShaIndex p_step(const TwistParams& params, const ShaIndex& x) {
  require_supersingular(params);
  if ((x.b != 1 && x.b != 5) || x.a < 1 || x.a >= params.q) throw Error(ErrorKind::Validation, "index outside S");
  const u64 qm1 = params.q - 1;
  const u64 shift = (params.p + 1) / 6 * static_cast<u64>(x.b) % qm1;
  u64 a = (arith::mulmod(params.p % qm1, x.a % qm1, qm1) + qm1 - shift + 1) % qm1;
  if (a == 0) a = qm1;
  return ShaIndex{6 - x.b, a};
}

std::vector<ShaOrbit> sha_orbits(const TwistParams& params, u64 enum_cap) {
  require_supersingular(params);
  const u64 qm1 = params.q - 1;
  if (qm1 > enum_cap / 2) throw Error(ErrorKind::CapExceeded, "Sha index set of size " + std::to_string(2 * qm1));
  std::vector<char> seen(2 * qm1, 0);
  std::vector<ShaOrbit> out;
  for (int b : {1, 5}) {
    for (u64 a = 1; a <= qm1; ++a) {
      const ShaIndex start{b, a};
      if (seen[slot(params, start)]) continue;
      ShaOrbit o;
      o.rep = start;
      ShaIndex cur = start;
      do {
        seen[slot(params, cur)] = 1;
        ++o.size;
        o.in_s0 += in_s0(params, cur) ? 1 : 0;
        o.in_s1 += in_s1(params, cur) ? 1 : 0;
        cur = p_step(params, cur);
        if (o.size > static_cast<int>(2 * qm1)) identity_failure("p-action on S does not close");
      } while (cur != start);
      o.d = std::min(o.in_s0, o.in_s1);
      out.push_back(o);
    }
  }
  return out;
}

long dim_sha(const TwistParams& params, u64 enum_cap) {
  if (params.p % 6 == 1) return 0;
  long total = 0;
  for (const auto& o : sha_orbits(params, enum_cap)) total += o.d;
  return total;
}

OrdGjTable ord_gj_check(const TwistParams& params) {
  if (params.p % 6 != 1) throw Error(ErrorKind::WrongResidue, "needs p = 1 mod 6");
  const u64 big_n = 6 * (params.q - 1);
  const u64 m = std::lcm(static_cast<u64>(params.nu), arith::multiplicative_order(params.p % big_n, big_n));
  if (m > 64) throw Error(ErrorKind::CapExceeded, "digit length m = " + std::to_string(m));
  OrdGjTable table;
  table.m = static_cast<int>(m);
  mpz_class pm;
  mpz_ui_pow_ui(pm.get_mpz_t(), params.p, m);
  const mpz_class cofactor = (pm - 1) / mpz_class(static_cast<unsigned long>(big_n));
  auto ord_of = [&](u64 j) {
    const u64 s = (big_n - j % big_n) % big_n;
    return stickelberger_ord(params.p, static_cast<int>(m), mpz_class(static_cast<unsigned long>(s)) * cofactor);
  };
  const mpq_class mq(static_cast<long>(m));
  for (u64 j = 1; j < big_n; ++j) {
    if (j % 3 == 0) continue;
    OrdGjRow row;
    row.j = j;
    row.ord = ord_of(j);
    row.claimed = j % 3 == 1 ? mpq_class(2 * static_cast<long>(m), 3) : mpq_class(static_cast<long>(m), 3);
    row.claimed.canonicalize();
    if (row.ord == row.claimed) ++table.matches;
    if (row.ord + ord_of(big_n - j) != mq) table.complementary = false;
    if (ord_of(arith::mulmod(params.p % big_n, j, big_n)) != row.ord) table.frobenius_invariant = false;
    if (row.ord <= 0 || row.ord >= mq) table.bounded = false;
    table.rows.push_back(std::move(row));
  }
  mpq_class two_thirds(2 * static_cast<long>(m), 3), third(static_cast<long>(m), 3);
  two_thirds.canonicalize();
  third.canonicalize();
  table.cubic_exact = ord_of(2 * (params.q - 1)) == two_thirds && ord_of(4 * (params.q - 1)) == third;
  return table;
}

}  // namespace astwist
