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


#include "astwist/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "astwist/arith.hpp"
#include "astwist/error.hpp"

namespace astwist {

namespace {

int mod_n(long long v, int n) { return static_cast<int>(((v % n) + n) % n); }

// Smallest k >= 1 with r^k i = i mod n.
int i_period(u64 r, int n, int i) {
  const long long rn = static_cast<long long>(r % static_cast<u64>(n));
  long long cur = mod_n(i * rn, n);
  int k = 1;
  while (cur != i) {
    cur = mod_n(cur * rn, n);
    ++k;
  }
  return k;
}

}  // namespace

TwistParams TwistParams::make(u64 p, int nu, int f) {
  if (!arith::is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p));
  if (p <= 3) throw Error(ErrorKind::Validation, "p must exceed 3");
  if (nu < 1 || f < 1) throw Error(ErrorKind::Validation, "nu and f must be positive");
  TwistParams out;
  out.p = p;
  out.nu = nu;
  out.f = f;
  const u64 limit = u64{1} << 62;
  out.r = arith::checked_pow(p, static_cast<u64>(nu), limit);
  out.q = arith::checked_pow(p, static_cast<u64>(f), limit);
  if (out.r == 0 || out.q == 0) throw Error(ErrorKind::CapExceeded, "r or q beyond 2^62");
  return out;
}

int alpha_degree(const TwistParams& params, u64 j) {
  const u64 qm1 = params.q - 1;
  for (int d = 1; d <= params.f; ++d) {
    if (params.f % d != 0) continue;
    const u64 pd = arith::powmod(params.p, static_cast<u64>(d), qm1 == 1 ? 2 : qm1);
    // alpha^(p^d) = alpha  <=>  j (p^d - 1) = 0 mod (q - 1)
    if (qm1 == 1 || arith::mulmod(j % qm1, (pd + qm1 - 1) % qm1, qm1) == 0) return d;
  }
  return params.f;
}

Orbit orbit_of(const TwistParams& params, int n, OrbitPoint pt) {
  const u64 qm1 = params.q - 1;
  const int rn = static_cast<int>(params.r % static_cast<u64>(n));
  const u64 rinv = qm1 == 1 ? 0 : arith::invmod(params.r % qm1, qm1);
  Orbit o;
  o.n = n;
  pt.i = mod_n(pt.i, n);
  pt.j = qm1 == 1 ? 0 : pt.j % qm1;
  std::vector<OrbitPoint> seq;
  OrbitPoint cur = pt;
  do {
    seq.push_back(cur);
    cur.i = mod_n(static_cast<long long>(cur.i) * rn, n);
    cur.j = qm1 == 1 ? 0 : arith::mulmod(cur.j, rinv, qm1);
  } while (cur != pt);
  const auto min_it = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), min_it, seq.end());
  o.rep = seq.front();
  o.size = static_cast<int>(seq.size());
  o.elements = std::move(seq);
  o.alpha_degree = alpha_degree(params, o.rep.j);
  return o;
}

int orbit_size_formula(const TwistParams& params, int n, OrbitPoint pt) {
  const int d = alpha_degree(params, pt.j);
  const int over_fr = std::lcm(params.nu, d) / params.nu;
  return std::lcm(i_period(params.r, n, mod_n(pt.i, n)), over_fr);
}

std::vector<Orbit> enumerate_orbits(const TwistParams& params, int n, bool units_only, u64 enum_cap) {
  if (n < 2 || params.p % static_cast<u64>(n) == 0) throw Error(ErrorKind::Validation, "n must be >= 2 and prime to p");
  const u64 qm1 = params.q - 1;
  if (static_cast<u64>(n) > enum_cap / qm1) {
    throw Error(ErrorKind::CapExceeded, "orbit enumeration of " + std::to_string(n) + " x " + std::to_string(qm1));
  }
  std::vector<char> seen(static_cast<std::size_t>(n) * qm1, 0);
  std::vector<Orbit> out;
  for (int i = 1; i < n; ++i) {
    if (units_only && std::gcd(i, n) != 1) continue;
    for (u64 j = 0; j < qm1; ++j) {
      if (seen[static_cast<std::size_t>(i) * qm1 + j]) continue;
      Orbit o = orbit_of(params, n, {i, j});
      for (const auto& e : o.elements) seen[static_cast<std::size_t>(e.i) * qm1 + e.j] = 1;
      out.push_back(std::move(o));
    }
  }
  std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) { return a.rep < b.rep; });
  return out;
}

Orbit project(const TwistParams& params, const Orbit& o, int target_n) {
  if (o.n % target_n != 0) throw Error(ErrorKind::Validation, "target modulus must divide n");
  return orbit_of(params, target_n, {mod_n(o.rep.i, target_n), o.rep.j});
}

Orbit conjugate_orbit(const TwistParams& params, const Orbit& o) {
  return orbit_of(params, o.n, {mod_n(-o.rep.i, o.n), o.rep.j});
}

std::vector<NOrbit> n_orbits(const TwistParams& params) {
  if (params.r % 6 == 1) return {NOrbit{{1}}, NOrbit{{5}}};
  return {NOrbit{{1, 5}}};
}

NOrbit rho6(const TwistParams& params, const Orbit& o) {
  const int i = mod_n(o.rep.i, 6);
  for (const auto& no : n_orbits(params)) {
    if (std::find(no.elements.begin(), no.elements.end(), i) != no.elements.end()) return no;
  }
  throw Error(ErrorKind::Validation, "i is not a unit mod 6");
}

Multipliers multipliers(const TwistParams& params, const Orbit& o) {
  Multipliers m;
  m.m2 = o.size / project(params, o, 2).size;
  m.n6 = o.size / rho6(params, o).size();
  return m;
}

std::vector<int> required_degrees(const TwistParams& params, const std::vector<Orbit>& orbits6) {
  std::vector<int> degs{params.f};
  for (const auto& no : n_orbits(params)) degs.push_back(params.nu * no.size());
  for (const auto& o : orbits6) degs.push_back(params.nu * o.size);
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  return degs;
}

}  // namespace astwist
