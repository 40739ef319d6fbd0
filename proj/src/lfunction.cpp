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


#include "astwist/lfunction.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "astwist/error.hpp"

namespace astwist {

namespace {

mpz_class r_pow(const TwistParams& params, int e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), params.r, static_cast<unsigned long>(e));
  return out;
}

OrbitFactor make_factor(const TwistParams& params, int m, const Orbit& o, cyclo::CycloInt omega) {
  OrbitFactor f;
  f.orbit = o;
  f.unitary_root = omega == cyclo::CycloInt(m, r_pow(params, o.size));
  f.omega = std::move(omega);
  return f;
}

}  // namespace

std::vector<OrbitFactor> as_factors(const TwistContext& ctx) {
  const auto& params = ctx.params();
  std::vector<OrbitFactor> out;
  for (const Orbit& o : ctx.orbits6()) {
    const Orbit o2 = project(params, o, 2);
    const Orbit o3 = project(params, o, 3);
    const int m2 = o.size / o2.size;
    auto omega = ctx.gauss(o2).pow(static_cast<unsigned long>(m2)) * ctx.gauss(o3);
    out.push_back(make_factor(params, ctx.conductor(), o, std::move(omega)));
  }
  return out;
}

std::vector<OrbitFactor> st_factors(const TwistContext& ctx) {
  const auto& params = ctx.params();
  std::vector<OrbitFactor> out;
  for (const Orbit& o : ctx.orbits6()) {
    const NOrbit rho = rho6(params, o);
    const int n6 = o.size / rho.size();
    auto omega = ctx.jacobi(rho).pow(static_cast<unsigned long>(n6)) * ctx.gauss(o);
    out.push_back(make_factor(params, ctx.conductor(), o, std::move(omega)));
  }
  return out;
}

LPolynomial expand(const TwistParams& params, int conductor, const std::vector<OrbitFactor>& factors) {
  int total = 0;
  for (const auto& f : factors) total += f.orbit.size;
  std::vector<cyclo::CycloInt> poly(static_cast<std::size_t>(total) + 1, cyclo::CycloInt::zero(conductor));
  poly[0] = cyclo::CycloInt::one(conductor);
  int deg = 0;
  for (const auto& f : factors) {
    const int s = f.orbit.size;
    for (int k = deg; k >= 0; --k) {
      if (poly[static_cast<std::size_t>(k)].is_zero()) continue;
      poly[static_cast<std::size_t>(k + s)] -= f.omega * poly[static_cast<std::size_t>(k)];
    }
    deg += s;
  }
  LPolynomial L;
  L.params = params;
  L.coeffs.reserve(poly.size());
  for (const auto& c : poly) L.coeffs.push_back(c.as_integer());
  return L;
}

LPolynomial l_poly_orbit(const TwistContext& ctx) { return expand(ctx.params(), ctx.conductor(), as_factors(ctx)); }

LPolynomial l_poly_sextic(const TwistContext& ctx) { return expand(ctx.params(), ctx.conductor(), st_factors(ctx)); }

std::vector<mpz_class> taylor_from_poly(const LPolynomial& L, int n_max) {
  std::vector<mpz_class> c(static_cast<std::size_t>(n_max) + 1, 0);
  auto a = [&](int k) -> mpz_class { return k <= L.degree() ? L.coeffs[static_cast<std::size_t>(k)] : mpz_class(0); };
  for (int n = 1; n <= n_max; ++n) {
    mpz_class v = -mpz_class(n) * a(n);
    for (int k = 1; k < n; ++k) v -= a(k) * c[static_cast<std::size_t>(n - k)];
    c[static_cast<std::size_t>(n)] = v;
  }
  c.erase(c.begin());
  return c;
}

namespace {

// Q with L = (1 - rT) Q, or false when 1/r is not a root.
bool divide_once(const std::vector<mpz_class>& a, const mpz_class& r, std::vector<mpz_class>& q) {
  if (a.size() < 2) return false;
  q.assign(a.size() - 1, 0);
  mpz_class prev = 0;
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    prev = a[k] + r * prev;
    q[k] = prev;
  }
  return a.back() + r * prev == 0;
}

std::pair<int, std::vector<mpz_class>> strip_root(const LPolynomial& L) {
  const mpz_class r(static_cast<unsigned long>(L.params.r));
  std::vector<mpz_class> cur = L.coeffs;
  std::vector<mpz_class> next;
  int rank = 0;
  while (divide_once(cur, r, next)) {
    cur.swap(next);
    ++rank;
  }
  return {rank, cur};
}

}  // namespace

int analytic_rank(const LPolynomial& L) { return strip_root(L).first; }

mpq_class special_value(const LPolynomial& L) {
  const auto [rank, q] = strip_root(L);
  // sum q_k r^{-k} = (sum q_k r^{d-k}) / r^d
  const mpz_class r(static_cast<unsigned long>(L.params.r));
  mpz_class num = 0;
  for (const auto& qk : q) num = num * r + qk;
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), r.get_mpz_t(), q.empty() ? 0 : q.size() - 1);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

int functional_equation_sign(const LPolynomial& L) {
  const int d = L.degree();
  const mpz_class r(static_cast<unsigned long>(L.params.r));
  for (int w : {1, -1}) {
    bool ok = true;
    for (int k = 0; k <= d && ok; ++k) {
      const int e = d - 2 * k;
      mpz_class lhs = L.coeffs[static_cast<std::size_t>(d - k)];
      mpz_class rhs = L.coeffs[static_cast<std::size_t>(k)] * w;
      mpz_class rp;
      mpz_pow_ui(rp.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
      if (e >= 0) {
        ok = lhs == rhs * rp;
      } else {
        ok = lhs * rp == rhs;
      }
    }
    if (ok) return w;
  }
  return 0;
}

OrbitPartition orbit_partition(const std::vector<OrbitFactor>& factors) {
  OrbitPartition out;
  for (const auto& f : factors) (f.unitary_root ? out.unitary : out.non_unitary).push_back(f.orbit);
  return out;
}

long double weil_deviation(const std::vector<OrbitFactor>& factors, u64 r) {
  long double worst = 0;
  for (const auto& f : factors) {
    const int m = f.omega.conductor();
    const long double target = std::pow(static_cast<long double>(r), static_cast<long double>(f.orbit.size));
    for (int k = 1; k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      const auto mag = f.omega.complex_abs(k);
      worst = std::max(worst, std::fabs(mag.value / target - 1.0L));
    }
  }
  return worst;
}

std::string digest(const LPolynomial& L) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& c : L.coeffs) {
    feed(c.get_str());
    feed(",");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace astwist
