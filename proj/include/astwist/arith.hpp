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


#ifndef ASTWIST_ARITH_HPP
#define ASTWIST_ARITH_HPP

// Word-size modular arithmetic and factoring used by the field layer.

#include <cstdint>
#include <utility>
#include <vector>

namespace astwist::arith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 mod);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 invmod(u64 a, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<u64, int>> factorize(u64 n);

std::vector<u64> prime_divisors(u64 n);

/// Order of a in (Z/nZ)^x; requires gcd(a, n) = 1 and n >= 1.
u64 multiplicative_order(u64 a, u64 n);

/// base^exp, or 0 if the result would exceed limit.
u64 checked_pow(u64 base, u64 exp, u64 limit);

/// Positive divisors of n in increasing order.
std::vector<u64> divisors(u64 n);

/// Euler phi.
u64 euler_phi(u64 n);

/// Mobius function.
int mobius(u64 n);

}  // namespace astwist::arith

#endif
