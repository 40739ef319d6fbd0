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


#include "astwist/cyclo.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

#include "astwist/arith.hpp"
#include "astwist/error.hpp"

namespace astwist::cyclo {

namespace {

using IntPoly = std::vector<long long>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by the monic x^d - 1.
IntPoly poly_div_xd_minus_1(IntPoly a, int d) {
  const std::size_t deg = a.size() - 1;
  IntPoly q(deg - static_cast<std::size_t>(d) + 1, 0);
  for (std::size_t k = deg; k >= static_cast<std::size_t>(d); --k) {
    const long long c = a[k];
    q[k - static_cast<std::size_t>(d)] = c;
    a[k] -= c;
    a[k - static_cast<std::size_t>(d)] += c;
  }
  for (long long v : a)
    if (v != 0) identity_failure("cyclotomic division left a remainder");
  return q;
}

IntPoly x_pow_minus_1(int d) {
  IntPoly r(static_cast<std::size_t>(d) + 1, 0);
  r[0] = -1;
  r[static_cast<std::size_t>(d)] = 1;
  return r;
}

long double to_long_double(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<long double>(v.get_si());
  return std::strtold(v.get_str().c_str(), nullptr);
}

}  // namespace

Ring::Ring(int m) : m_(m) {
  if (m < 1) throw Error(ErrorKind::Validation, "conductor must be positive");
  phi_ = static_cast<int>(arith::euler_phi(static_cast<arith::u64>(m)));
  IntPoly num{1};
  std::vector<int> den;
  for (arith::u64 d : arith::divisors(static_cast<arith::u64>(m))) {
    const int mu = arith::mobius(static_cast<arith::u64>(m) / d);
    if (mu == 1) num = poly_mul(num, x_pow_minus_1(static_cast<int>(d)));
    if (mu == -1) den.push_back(static_cast<int>(d));
  }
  for (int d : den) num = poly_div_xd_minus_1(num, d);
  cyclotomic_ = num;

  zeta_powers_.assign(static_cast<std::size_t>(m), IntPoly(static_cast<std::size_t>(phi_), 0));
  IntPoly cur(static_cast<std::size_t>(phi_), 0);
  cur[0] = 1;
  for (int e = 0; e < m; ++e) {
    zeta_powers_[static_cast<std::size_t>(e)] = cur;
    // multiply by zeta and reduce
    const long long top = cur[static_cast<std::size_t>(phi_ - 1)];
    for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi_; ++i) cur[i] -= top * cyclotomic_[i];
  }
}

std::shared_ptr<const Ring> ring(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Ring>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto r = std::make_shared<const Ring>(m);
  cache.emplace(m, r);
  return r;
}

CycloInt::CycloInt(int m, const mpz_class& v) : m_(m), c_(static_cast<std::size_t>(ring(m)->rank())) {
  c_[0] = v;
}

CycloInt CycloInt::zeta(int m, long long e) {
  auto r = ring(m);
  const long long em = ((e % m) + m) % m;
  CycloInt out = zero(m);
  const auto& v = r->zeta_power(static_cast<int>(em));
  for (std::size_t i = 0; i < v.size(); ++i) out.c_[i] = static_cast<long>(v[i]);
  return out;
}

CycloInt CycloInt::from_zeta_counts(int m, std::span<const std::int64_t> counts) {
  auto r = ring(m);
  if (static_cast<int>(counts.size()) != m) throw Error(ErrorKind::ConductorMismatch, "count vector length");
  std::vector<__int128> acc(static_cast<std::size_t>(r->rank()), 0);
  for (int e = 0; e < m; ++e) {
    const std::int64_t k = counts[static_cast<std::size_t>(e)];
    if (k == 0) continue;
    const auto& v = r->zeta_power(e);
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += static_cast<__int128>(k) * v[i];
  }
  CycloInt out = zero(m);
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const __int128 a = acc[i];
    const bool neg = a < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-a) : static_cast<unsigned __int128>(a);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & ~static_cast<std::uint64_t>(0)));
    mpz_class val = (hi << 64) + lo;
    out.c_[i] = neg ? mpz_class(-val) : val;
  }
  return out;
}

CycloInt CycloInt::from_coeffs(int m, std::vector<mpz_class> coeffs) {
  auto r = ring(m);
  if (static_cast<int>(coeffs.size()) != r->rank()) throw Error(ErrorKind::ConductorMismatch, "coefficient count");
  CycloInt out;
  out.m_ = m;
  out.c_ = std::move(coeffs);
  return out;
}

bool CycloInt::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

void CycloInt::check_same(const CycloInt& b) const {
  if (m_ != b.m_) {
    throw Error(ErrorKind::ConductorMismatch, std::to_string(m_) + " vs " + std::to_string(b.m_));
  }
}

CycloInt& CycloInt::operator+=(const CycloInt& b) {
  check_same(b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& b) {
  check_same(b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

CycloInt& CycloInt::operator*=(const CycloInt& b) { return *this = *this * b; }

CycloInt& CycloInt::operator*=(const mpz_class& k) {
  for (auto& v : c_) v *= k;
  return *this;
}

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
  a.check_same(b);
  auto r = ring(a.m_);
  const int phi = r->rank();
  std::vector<mpz_class> t(static_cast<std::size_t>(2 * phi - 1));
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.c_[j] == 0) continue;
      mpz_addmul(t[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  CycloInt out;
  out.m_ = a.m_;
  out.c_.assign(t.begin(), t.begin() + phi);
  mpz_class tmp;
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (t[k] == 0) continue;
    // 2 phi(m) - 2 < m for the conductors in use, but stay general
    const auto& v = r->zeta_power(k % a.m_);
    for (int i = 0; i < phi; ++i) {
      if (v[i] == 0) continue;
      tmp = t[k] * static_cast<long>(v[i]);
      out.c_[i] += tmp;
    }
  }
  return out;
}

CycloInt CycloInt::operator-() const {
  CycloInt out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

bool operator==(const CycloInt& a, const CycloInt& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

CycloInt CycloInt::pow(unsigned long e) const {
  CycloInt result = one(m_);
  CycloInt base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

CycloInt CycloInt::galois(long long k) const {
  const long long m = m_;
  const long long km = ((k % m) + m) % m;
  if (std::gcd(km, m) != 1) throw Error(ErrorKind::BadEmbedding, "Galois index " + std::to_string(k));
  auto r = ring(m_);
  CycloInt out = zero(m_);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& v = r->zeta_power(static_cast<int>((static_cast<long long>(j) * km) % m));
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) out.c_[i] += c_[j] * static_cast<long>(v[i]);
  }
  return out;
}

Magnitude CycloInt::complex_abs(long long k) const {
  const long long m = m_;
  const long long km = ((k % m) + m) % m;
  if (std::gcd(km, m) != 1) throw Error(ErrorKind::BadEmbedding, "embedding index " + std::to_string(k));
  const long double two_pi = 6.283185307179586476925286766559005768L;
  long double re = 0, im = 0, mass = 0;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const long double cj = to_long_double(c_[j]);
    const long double angle = two_pi * static_cast<long double>((static_cast<long long>(j) * km) % m) /
                              static_cast<long double>(m);
    re += cj * std::cos(angle);
    im += cj * std::sin(angle);
    mass += std::fabs(cj);
  }
  Magnitude out;
  out.value = std::sqrt(re * re + im * im);
  // conversion, trig and accumulation each lose at most a few ulps per term
  out.error = mass * static_cast<long double>(c_.size() + 4) * 0x1p-60L;
  return out;
}

bool CycloInt::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpz_class CycloInt::as_integer() const {
  if (!is_integer()) throw Error(ErrorKind::NotRational, to_string());
  return c_.empty() ? mpz_class(0) : c_[0];
}

std::optional<int> CycloInt::root_of_unity_exponent() const {
  auto r = ring(m_);
  for (int e = 0; e < m_; ++e) {
    const auto& v = r->zeta_power(e);
    bool same = true;
    for (std::size_t i = 0; i < v.size() && same; ++i) same = c_[i] == static_cast<long>(v[i]);
    if (same) return e;
  }
  return std::nullopt;
}

std::string CycloInt::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].get_str();
  }
  return s + "]";
}

long padic_ord(const mpz_class& a, unsigned long p) {
  if (a == 0) throw Error(ErrorKind::ZeroValue, "valuation of zero");
  mpz_class v = abs(a);
  long k = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    ++k;
  }
  return k;
}

long padic_ord(const mpq_class& a, unsigned long p) {
  if (a == 0) throw Error(ErrorKind::ZeroValue, "valuation of zero");
  return padic_ord(mpz_class(a.get_num()), p) - padic_ord(mpz_class(a.get_den()), p);
}

std::string rational_string(const mpq_class& a) { return a.get_num().get_str() + "/" + a.get_den().get_str(); }

}  // namespace astwist::cyclo
