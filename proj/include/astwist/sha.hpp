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


#ifndef ASTWIST_SHA_HPP
#define ASTWIST_SHA_HPP

// Combinatorics of the p-part of Sha: the set S = {1,5} x {1..q-1}, the
// subsets S0 and S1, the action of p, and the orbit statistic
// d(o) = min(|o n S0|, |o n S1|). Also the digit-sum table of ord G_j.

#include <gmpxx.h>

#include <compare>
#include <vector>

#include "astwist/orbits.hpp"

namespace astwist {

struct ShaIndex {
  int b = 1;
  u64 a = 1;

  friend bool operator==(const ShaIndex&, const ShaIndex&) = default;
  friend auto operator<=>(const ShaIndex&, const ShaIndex&) = default;
};

bool in_s0(const TwistParams& params, const ShaIndex& x);
bool in_s1(const TwistParams& params, const ShaIndex& x);

/// b' = 6 - b, a' = p a - (p + 1) b / 6 + 1 mod (q - 1) in {1..q-1}.
/// Throws WrongResidue unless p = 5 mod 6.
ShaIndex p_step(const TwistParams& params, const ShaIndex& x);

struct ShaOrbit {
  ShaIndex rep;
  int size = 0;
  int in_s0 = 0;
  int in_s1 = 0;
  int d = 0;
};

/// Orbits of <p> on S sorted by representative. Throws WrongResidue,
/// CapExceeded.
std::vector<ShaOrbit> sha_orbits(const TwistParams& params, u64 enum_cap = 10'000'000);

/// 0 when p = 1 mod 6, else the sum of d(o).
long dim_sha(const TwistParams& params, u64 enum_cap = 10'000'000);

struct OrdGjRow {
  u64 j = 0;
  mpq_class ord;
  mpq_class claimed;  // 2m/3 if j = 1 mod 3, m/3 if j = 2 mod 3
};

struct OrdGjTable {
  int m = 0;
  std::vector<OrdGjRow> rows;
  int matches = 0;
  /// ord(j) + ord(-j) = m for every row.
  bool complementary = true;
  /// ord(pj) = ord(j) for every row.
  bool frobenius_invariant = true;
  /// 0 < ord < m for every row.
  bool bounded = true;
  /// ord = 2m/3 at j = 2(q-1) and m/3 at j = 4(q-1), the cubic characters.
  bool cubic_exact = true;
};

/// Throws WrongResidue unless p = 1 mod 6, CapExceeded when m > 64.
OrdGjTable ord_gj_check(const TwistParams& params);

}  // namespace astwist

#endif
