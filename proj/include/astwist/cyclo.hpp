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


#ifndef ASTWIST_CYCLO_HPP
#define ASTWIST_CYCLO_HPP

// Exact arithmetic in Z[zeta_m], stored in the power basis 1, zeta, ...,
// zeta^(phi(m)-1) modulo the m-th cyclotomic polynomial.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace astwist::cyclo {

/// Shared per-conductor data: Phi_m and the reduced images of zeta^e.
class Ring {
 public:
  explicit Ring(int m);

  int conductor() const noexcept { return m_; }
  int rank() const noexcept { return phi_; }
  /// Phi_m, constant term first, monic.
  const std::vector<long long>& cyclotomic() const noexcept { return cyclotomic_; }
  /// zeta^e reduced, e in [0, m).
  const std::vector<long long>& zeta_power(int e) const { return zeta_powers_[static_cast<std::size_t>(e)]; }

 private:
  int m_;
  int phi_;
  std::vector<long long> cyclotomic_;
  std::vector<std::vector<long long>> zeta_powers_;
};

/// Cached ring for conductor m (m >= 1).
std::shared_ptr<const Ring> ring(int m);

/// Value of a complex embedding with an absolute error bound.
struct Magnitude {
  long double value = 0;
  long double error = 0;
};

class CycloInt {
 public:
  CycloInt() = default;
  CycloInt(int m, const mpz_class& v);

  static CycloInt zero(int m) { return CycloInt(m, 0); }
  static CycloInt one(int m) { return CycloInt(m, 1); }
  static CycloInt zeta(int m, long long e);
  /// Sum of counts[e] * zeta^e over e in [0, m).
  static CycloInt from_zeta_counts(int m, std::span<const std::int64_t> counts);
  static CycloInt from_coeffs(int m, std::vector<mpz_class> coeffs);

  int conductor() const noexcept { return m_; }
  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  bool is_zero() const;

  CycloInt& operator+=(const CycloInt& b);
  CycloInt& operator-=(const CycloInt& b);
  CycloInt& operator*=(const CycloInt& b);
  CycloInt& operator*=(const mpz_class& k);
  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
  friend CycloInt operator*(CycloInt a, const mpz_class& k) { return a *= k; }
  CycloInt operator-() const;
  friend bool operator==(const CycloInt& a, const CycloInt& b);

  CycloInt pow(unsigned long e) const;
  /// sigma_k: zeta -> zeta^k, gcd(k, m) = 1.
  CycloInt galois(long long k) const;
  CycloInt conj() const { return galois(-1); }

  /// |a| under zeta -> exp(2 pi i k / m). Throws BadEmbedding.
  Magnitude complex_abs(long long k) const;

  bool is_integer() const;
  /// Throws NotRational.
  mpz_class as_integer() const;
  /// e with a = zeta^e, if a is a root of unity in mu_m.
  std::optional<int> root_of_unity_exponent() const;

  std::string to_string() const;

 private:
  void check_same(const CycloInt& b) const;

  int m_ = 0;
  std::vector<mpz_class> c_;
};

/// Exponent of p in a nonzero integer. Throws ZeroValue.
long padic_ord(const mpz_class& a, unsigned long p);
/// Exponent of p in numerator minus in denominator. Throws ZeroValue.
long padic_ord(const mpq_class& a, unsigned long p);

/// Decimal string of a big rational, always with a denominator ("16/1").
std::string rational_string(const mpq_class& a);

}  // namespace astwist::cyclo

#endif
