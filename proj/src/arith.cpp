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


#include "astwist/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace astwist::arith {

u64 powmod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 m) {
  // extended Euclid on signed 128-bit to avoid overflow
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 qt = old_r / r;
    __int128 tmp = old_r - qt * r;
    old_r = r;
    r = tmp;
    tmp = old_s - qt * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::invalid_argument("invmod: not invertible");
  __int128 res = old_s % static_cast<__int128>(m);
  if (res < 0) res += m;
  return static_cast<u64>(res);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Pollard-Brent; n must be composite and odd.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 m = 128, r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<u64> primes;
  for (u64 sp = 2; sp < 1000 && sp * sp <= n; ++sp) {
    while (n % sp == 0) {
      primes.push_back(sp);
      n /= sp;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, int>> result;
  for (u64 pr : primes) {
    if (!result.empty() && result.back().first == pr) {
      ++result.back().second;
    } else {
      result.emplace_back(pr, 1);
    }
  }
  return result;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto [pr, e] : factorize(n)) out.push_back(pr);
  return out;
}

u64 multiplicative_order(u64 a, u64 n) {
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  u64 phi = euler_phi(n);
  u64 ord = phi;
  for (auto [pr, e] : factorize(phi)) {
    for (int k = 0; k < e; ++k) {
      if (powmod(a, ord / pr, n) == 1) {
        ord /= pr;
      } else {
        break;
      }
    }
  }
  return ord;
}

u64 checked_pow(u64 base, u64 exp, u64 limit) {
  u64 result = 1;
  for (u64 i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return 0;
    result *= base;
  }
  return result > limit ? 0 : result;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> divs{1};
  for (auto [pr, e] : factorize(n)) {
    std::size_t count = divs.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= pr;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

u64 euler_phi(u64 n) {
  u64 result = n;
  for (auto [pr, e] : factorize(n)) result = result / pr * (pr - 1);
  return result;
}

int mobius(u64 n) {
  int result = 1;
  for (auto [pr, e] : factorize(n)) {
    if (e > 1) return 0;
    result = -result;
  }
  return result;
}

}  // namespace astwist::arith
