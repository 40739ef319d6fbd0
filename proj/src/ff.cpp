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


#include "astwist/ff.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "astwist/arith.hpp"
#include "astwist/error.hpp"

namespace astwist::ff {

namespace {

using Poly = std::vector<u64>;  // constant term first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const u64 lead_inv = arith::invmod(f.back(), p);
  while (a.size() >= f.size()) {
    const u64 coef = arith::mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - arith::mulmod(coef, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + arith::mulmod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(u64 p, std::span<const std::uint32_t> monic) {
  const int k = static_cast<int>(monic.size()) - 1;
  if (k < 1 || monic.back() != 1) return false;
  if (k == 1) return true;
  const Poly f(monic.begin(), monic.end());
  const Poly x{0, 1};
  std::vector<Poly> frob_powers;  // x^(p^i) mod f for i = 1..k
  Poly h = x;
  for (int i = 1; i <= k; ++i) {
    h = poly_powmod(h, p, f, p);
    frob_powers.push_back(h);
  }
  if (frob_powers.back() != poly_mod(x, f, p)) return false;
  for (u64 ell : arith::prime_divisors(static_cast<u64>(k))) {
    Poly g = frob_powers[static_cast<std::size_t>(k / static_cast<int>(ell)) - 1];
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    if (g.empty()) return false;  // x^(p^(k/l)) = x: a factor of smaller degree
    if (poly_gcd(f, g, p).size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(u64 p, int k) {
  std::vector<std::uint32_t> cand(static_cast<std::size_t>(k) + 1, 0);
  cand[static_cast<std::size_t>(k)] = 1;
  const u64 count = arith::checked_pow(p, static_cast<u64>(k), ~u64{0} >> 1);
  for (u64 idx = 0; idx < count; ++idx) {
    u64 v = idx;
    for (int i = 0; i < k; ++i) {
      cand[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible(p, cand)) return cand;
  }
  throw Error(ErrorKind::IdentityFailure, "no irreducible polynomial found");
}

Field Field::build_tower(u64 p, std::span<const int> degrees, const TowerOptions& options) {
  if (!arith::is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p));
  if (p <= 3) throw Error(ErrorKind::Validation, "characteristic must exceed 3");
  if (p >= (u64{1} << 31)) throw Error(ErrorKind::Validation, "characteristic must be below 2^31");
  if (degrees.empty()) throw Error(ErrorKind::Validation, "no degrees requested");
  u64 big_m = 1;
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorKind::Validation, "degrees must be positive");
    big_m = std::lcm(big_m, static_cast<u64>(d));
    if (big_m > static_cast<u64>(kMaxDegree)) {
      throw Error(ErrorKind::CapExceeded, "ambient degree " + std::to_string(big_m) + " over p=" + std::to_string(p));
    }
  }
  const u64 cap = std::min(options.ambient_cap, u64{1} << 62);
  const u64 size = arith::checked_pow(p, big_m, cap);
  if (size == 0) {
    throw Error(ErrorKind::CapExceeded,
                "p^M with p=" + std::to_string(p) + ", M=" + std::to_string(big_m) + " exceeds cap");
  }

  Field field;
  field.p_ = p;
  field.degree_ = static_cast<int>(big_m);
  field.size_ = size;
  field.modulus_ = smallest_irreducible(p, field.degree_);
  field.order_factors_ = arith::factorize(size - 1);
  for (auto [pr, e] : field.order_factors_) field.order_primes_.push_back(pr);

  int found = -1;
  for (u64 idx = 1; idx < size; ++idx) {
    const Element cand = field.from_index(idx);
    bool generates = true;
    for (u64 ell : field.order_primes_) {
      if (field.pow(cand, (size - 1) / ell) == field.one()) {
        generates = false;
        break;
      }
    }
    if (generates && ++found == options.generator_rank) {
      field.generator_ = cand;
      break;
    }
  }
  if (found != options.generator_rank) throw Error(ErrorKind::Validation, "generator rank out of range");
  field.generator_rank_ = options.generator_rank;

  field.init_frobenius();
  field.init_subfields();
  field.init_tables(options.table_cap);
  return field;
}

Element Field::one() const {
  Element e;
  e.c[0] = 1;
  return e;
}

Element Field::from_int(std::int64_t v) const {
  const auto sp = static_cast<std::int64_t>(p_);
  Element e;
  e.c[0] = static_cast<std::uint32_t>(((v % sp) + sp) % sp);
  return e;
}

Element Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) > degree_) throw Error(ErrorKind::Validation, "too many coefficients");
  Element e;
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.c[i] = static_cast<std::uint32_t>(coeffs[i] % p_);
  return e;
}

Element Field::from_index(u64 idx) const {
  Element e;
  for (int i = 0; i < degree_; ++i) {
    e.c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(idx % p_);
    idx /= p_;
  }
  return e;
}

u64 Field::index(const Element& x) const {
  u64 idx = 0;
  for (int i = degree_ - 1; i >= 0; --i) idx = idx * p_ + x.c[static_cast<std::size_t>(i)];
  return idx;
}

Element Field::add(const Element& a, const Element& b) const {
  Element r;
  for (int i = 0; i < degree_; ++i) {
    const u64 s = static_cast<u64>(a.c[i]) + b.c[i];
    r.c[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

Element Field::sub(const Element& a, const Element& b) const {
  Element r;
  for (int i = 0; i < degree_; ++i) {
    const u64 s = static_cast<u64>(a.c[i]) + p_ - b.c[i];
    r.c[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

Element Field::neg(const Element& a) const { return sub(Element{}, a); }

Element Field::mul(const Element& a, const Element& b) const {
  const int m = degree_;
  std::array<u64, 2 * kMaxDegree> t{};
  for (int i = 0; i < m; ++i) {
    const u64 ai = a.c[i];
    if (ai == 0) continue;
    for (int j = 0; j < m; ++j) t[i + j] = (t[i + j] + ai * b.c[j]) % p_;
  }
  for (int k = 2 * m - 2; k >= m; --k) {
    const u64 coef = t[k];
    if (coef == 0) continue;
    const u64 negc = p_ - coef;
    for (int i = 0; i < m; ++i) t[k - m + i] = (t[k - m + i] + negc * modulus_[i]) % p_;
  }
  Element r;
  for (int i = 0; i < m; ++i) r.c[i] = static_cast<std::uint32_t>(t[i]);
  return r;
}

Element Field::pow(const Element& a, u64 e) const {
  Element result = one();
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element Field::inv(const Element& a) const {
  if (is_zero(a)) throw Error(ErrorKind::ZeroElement, "inverse of zero");
  return pow(a, size_ - 2);
}

void Field::init_frobenius() {
  frob_columns_.assign(static_cast<std::size_t>(degree_), Element{});
  frob_columns_[0] = one();
  if (degree_ == 1) return;
  Element x;
  x.c[1] = 1;
  const Element xp = pow(x, p_);
  for (int j = 1; j < degree_; ++j) frob_columns_[j] = mul(frob_columns_[j - 1], xp);
}

Element Field::frobenius(const Element& x, long long e) const {
  const long long m = degree_;
  long long steps = ((e % m) + m) % m;
  Element y = x;
  while (steps-- > 0) {
    Element next;
    for (int j = 0; j < degree_; ++j) {
      const u64 coef = y.c[j];
      if (coef == 0) continue;
      for (int i = 0; i < degree_; ++i) {
        next.c[i] = static_cast<std::uint32_t>((next.c[i] + coef * frob_columns_[j].c[i]) % p_);
      }
    }
    y = next;
  }
  return y;
}

bool Field::contains(const Element& x, int k) const {
  if (k < 1 || degree_ % k != 0) throw Error(ErrorKind::NotASubfield, "degree " + std::to_string(k));
  return frobenius(x, k) == x;
}

int Field::degree_of(const Element& x) const {
  for (int k = 1; k <= degree_; ++k) {
    if (degree_ % k == 0 && contains(x, k)) return k;
  }
  return degree_;
}

void Field::init_subfields() {
  for (int k = 1; k <= degree_; ++k) {
    if (degree_ % k != 0) continue;
    Subfield sf;
    sf.degree = k;
    sf.size = arith::checked_pow(p_, static_cast<u64>(k), size_);
    sf.cofactor = (size_ - 1) / (sf.size - 1);
    sf.generator = pow(generator_, sf.cofactor);
    sf.trace_row.assign(static_cast<std::size_t>(degree_), 0);
    for (int i = 0; i < degree_; ++i) {
      Element basis;
      basis.c[i] = 1;
      u64 acc = 0;
      Element y = basis;
      for (int j = 0; j < k; ++j) {
        acc += y.c[0];
        y = frobenius(y, 1);
      }
      sf.trace_row[i] = static_cast<std::uint32_t>(acc % p_);
    }
    subfields_.emplace(k, std::move(sf));
  }
}

void Field::init_tables(u64 table_cap) {
  if (size_ > table_cap || size_ > (u64{1} << 32)) return;
  log_table_.assign(size_, 0);
  Element y = one();
  for (u64 e = 0; e + 1 < size_; ++e) {
    log_table_[index(y)] = static_cast<std::uint32_t>(e);
    y = mul(y, generator_);
  }
}

const Subfield& Field::subfield(int k) const {
  auto it = subfields_.find(k);
  if (it == subfields_.end()) {
    throw Error(ErrorKind::NotASubfield,
                "F_{p^" + std::to_string(k) + "} is not inside F_{p^" + std::to_string(degree_) + "}");
  }
  return it->second;
}

std::vector<int> Field::subfield_degrees() const {
  std::vector<int> out;
  for (const auto& [k, sf] : subfields_) out.push_back(k);
  return out;
}

std::pair<Element, Element> Field::trace_norm(const Element& x, int sub, int over) const {
  if (over == 0) over = degree_;
  if (sub < 1 || over < 1 || over % sub != 0 || degree_ % over != 0) {
    throw Error(ErrorKind::NotASubfield, "F_{p^" + std::to_string(sub) + "} in F_{p^" + std::to_string(over) + "}");
  }
  if (!contains(x, over)) throw Error(ErrorKind::NotASubfield, "element not in F_{p^" + std::to_string(over) + "}");
  Element tr;
  Element nm = one();
  Element conj = x;
  for (int j = 0; j < over / sub; ++j) {
    tr = add(tr, conj);
    nm = mul(nm, conj);
    conj = frobenius(conj, sub);
  }
  return {tr, nm};
}

std::uint32_t Field::absolute_trace(const Element& x, int k) const {
  const Subfield& sf = subfield(k);
  u64 acc = 0;
  for (int i = 0; i < degree_; ++i) acc += static_cast<u64>(sf.trace_row[i]) * x.c[i];
  return static_cast<std::uint32_t>(acc % p_);
}

u64 Field::dlog(const Element& x) const {
  if (is_zero(x)) throw Error(ErrorKind::ZeroElement, "dlog of zero");
  if (!log_table_.empty()) return log_table_[index(x)];
  return dlog_pohlig_hellman(x);
}

u64 Field::dlog_prime_power(const Element& x, u64 prime, int exponent) const {
  const u64 n = size_ - 1;
  u64 pe = 1;
  for (int i = 0; i < exponent; ++i) pe *= prime;
  const Element g_e = pow(generator_, n / pe);    // order prime^exponent
  const Element gamma = pow(generator_, n / prime);  // order prime
  const Element g_e_inv = inv(g_e);

  const u64 steps = static_cast<u64>(std::ceil(std::sqrt(static_cast<long double>(prime))));
  std::unordered_map<u64, u64> baby;
  baby.reserve(static_cast<std::size_t>(steps) * 2);
  Element y = one();
  for (u64 j = 0; j < steps; ++j) {
    baby.emplace(index(y), j);
    y = mul(y, gamma);
  }
  const Element giant = inv(pow(gamma, steps));

  u64 result = 0;
  u64 pk = 1;
  for (int k = 0; k < exponent; ++k) {
    u64 shift = 1;
    for (int i = 0; i < exponent - 1 - k; ++i) shift *= prime;
    const Element h = pow(mul(pow(g_e_inv, result), x), shift);
    Element probe = h;
    bool found = false;
    for (u64 i = 0; i <= steps && !found; ++i) {
      auto it = baby.find(index(probe));
      if (it != baby.end()) {
        const u64 digit = (i * steps + it->second) % prime;
        result += digit * pk;
        found = true;
      }
      probe = mul(probe, giant);
    }
    if (!found) identity_failure("baby-step/giant-step found no logarithm");
    pk *= prime;
  }
  return result;
}

u64 Field::dlog_pohlig_hellman(const Element& x) const {
  if (is_zero(x)) throw Error(ErrorKind::ZeroElement, "dlog of zero");
  const u64 n = size_ - 1;
  u64 acc = 0;
  u64 modulus = 1;
  for (auto [prime, e] : order_factors_) {
    u64 pe = 1;
    for (int i = 0; i < e; ++i) pe *= prime;
    const u64 residue = dlog_prime_power(pow(x, n / pe), prime, e);
    // CRT: find t with acc + modulus * t = residue (mod pe)
    const u64 diff = (residue + pe - acc % pe) % pe;
    const u64 t = arith::mulmod(diff, arith::invmod(modulus % pe, pe), pe);
    acc += modulus * t;
    modulus *= pe;
  }
  return acc % n;
}

bool Field::is_cube(const Element& x, int k) const {
  if (is_zero(x)) throw Error(ErrorKind::ZeroElement, "cube test of zero");
  const Subfield& sf = subfield(k);
  if (!contains(x, k)) throw Error(ErrorKind::Validation, "element is not in F_{p^" + std::to_string(k) + "}");
  if ((sf.size - 1) % 3 != 0) return true;
  return pow(x, (sf.size - 1) / 3) == one();
}

u64 Field::order(const Element& x) const {
  if (is_zero(x)) throw Error(ErrorKind::ZeroElement, "order of zero");
  u64 ord = size_ - 1;
  for (auto [prime, e] : order_factors_) {
    for (int i = 0; i < e && ord % prime == 0; ++i) {
      if (pow(x, ord / prime) == one()) {
        ord /= prime;
      } else {
        break;
      }
    }
  }
  return ord;
}

}  // namespace astwist::ff
