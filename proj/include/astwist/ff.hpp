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


#ifndef ASTWIST_FF_HPP
#define ASTWIST_FF_HPP

// Finite fields F_{p^k}, all realized inside one ambient field F_{p^M}.
//
// An ambient field is built once from the set of degrees a computation needs
// (M = lcm of them). Every F_{p^k} with k | M is then the fixed field of the
// k-th power of Frobenius, and its unit group is generated by
// g^((p^M - 1) / (p^k - 1)) for the single ambient generator g. All characters
// downstream are defined against that one generator.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace astwist::ff {

using u64 = std::uint64_t;

/// Largest supported degree over F_p (p >= 5 and p^M < 2^64).
inline constexpr int kMaxDegree = 28;

/// Coefficient vector over F_p in the basis 1, x, ..., x^{M-1}.
struct Element {
  std::array<std::uint32_t, kMaxDegree> c{};

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct TowerOptions {
  /// Upper bound on p^M.
  u64 ambient_cap = u64{1} << 40;
  /// Which generator to fix: 0 is the smallest in index order, k the (k+1)-th.
  int generator_rank = 0;
  /// Build discrete-log tables when p^M is at most this.
  u64 table_cap = u64{1} << 20;
};

/// Handle for the embedded subfield F_{p^k}.
struct Subfield {
  int degree = 0;
  u64 size = 0;
  /// (p^M - 1) / (p^k - 1): ambient logs of subfield units are multiples of it.
  u64 cofactor = 0;
  /// Generator of the subfield's unit group (ambient generator ^ cofactor).
  Element generator;
  /// Tr_{F_{p^k}/F_p} as a linear functional on coordinates; valid on F_{p^k}.
  std::vector<std::uint32_t> trace_row;
};

class Field {
 public:
  /// Ambient field of degree lcm(degrees). Throws NonPrime, CapExceeded,
  /// Validation.
  static Field build_tower(u64 p, std::span<const int> degrees, const TowerOptions& options = {});

  u64 characteristic() const noexcept { return p_; }
  int degree() const noexcept { return degree_; }
  u64 size() const noexcept { return size_; }
  u64 unit_order() const noexcept { return size_ - 1; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  const Element& generator() const noexcept { return generator_; }
  int generator_rank() const noexcept { return generator_rank_; }
  const std::vector<u64>& unit_order_primes() const noexcept { return order_primes_; }

  Element zero() const { return Element{}; }
  Element one() const;
  Element from_int(std::int64_t v) const;
  Element from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// Element whose coordinates are the base-p digits of idx (constant term
  /// least significant).
  Element from_index(u64 idx) const;
  u64 index(const Element& x) const;
  bool is_zero(const Element& x) const { return x == Element{}; }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, u64 e) const;
  /// Throws ZeroElement.
  Element inv(const Element& a) const;

  /// x^(p^e); e is reduced mod M, so negative e is inverse Frobenius.
  Element frobenius(const Element& x, long long e) const;

  /// True iff x lies in F_{p^k} (x^(p^k) = x). Requires k | M.
  bool contains(const Element& x, int k) const;
  /// Degree of F_p(x) over F_p.
  int degree_of(const Element& x) const;

  bool has_subfield(int k) const noexcept { return subfields_.count(k) != 0; }
  /// Throws NotASubfield when k does not divide M.
  const Subfield& subfield(int k) const;
  std::vector<int> subfield_degrees() const;

  /// (Tr, N) of x from F_{p^over} down to F_{p^sub}. over = 0 means the
  /// ambient field. Throws NotASubfield when sub does not divide over or x is
  /// not in F_{p^over}.
  std::pair<Element, Element> trace_norm(const Element& x, int sub, int over = 0) const;

  /// Tr_{F_{p^k}/F_p}(x) as an integer in [0, p); x must lie in F_{p^k}.
  std::uint32_t absolute_trace(const Element& x, int k) const;

  /// Discrete log to the ambient generator. Uses tables when present, else
  /// Pohlig-Hellman. Throws ZeroElement.
  u64 dlog(const Element& x) const;
  /// Pohlig-Hellman with baby-step/giant-step per prime, never tables.
  u64 dlog_pohlig_hellman(const Element& x) const;
  bool has_log_table() const noexcept { return !log_table_.empty(); }

  /// True iff x is a cube in F_{p^k}^x. Throws ZeroElement, NotASubfield.
  bool is_cube(const Element& x, int k) const;

  /// Multiplicative order of a nonzero element.
  u64 order(const Element& x) const;

 private:
  Field() = default;
  void init_frobenius();
  void init_subfields();
  void init_tables(u64 table_cap);
  u64 dlog_prime_power(const Element& x, u64 prime, int exponent) const;

  u64 p_ = 0;
  int degree_ = 0;
  u64 size_ = 0;
  int generator_rank_ = 0;
  std::vector<std::uint32_t> modulus_;  // monic, degree_ + 1 coefficients
  Element generator_;
  std::vector<std::pair<u64, int>> order_factors_;
  std::vector<u64> order_primes_;
  std::vector<Element> frob_columns_;  // image of x^j under Frobenius
  std::map<int, Subfield> subfields_;
  std::vector<std::uint32_t> log_table_;  // by index; unused slot 0
};

/// Lexicographically (by index) smallest monic irreducible of degree k over
/// F_p, returned as k + 1 coefficients, constant term first.
std::vector<std::uint32_t> smallest_irreducible(u64 p, int k);

/// Rabin's irreducibility test for a monic polynomial over F_p.
bool is_irreducible(u64 p, std::span<const std::uint32_t> monic);

}  // namespace astwist::ff

#endif
