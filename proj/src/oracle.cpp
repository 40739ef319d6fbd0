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


#include "astwist/oracle.hpp"

#include <numeric>
#include <string>

#include "astwist/arith.hpp"
#include "astwist/error.hpp"
#include "astwist/ff.hpp"

namespace astwist {

namespace {

using arith::mulmod;

// Index arithmetic on base-p digit vectors, i.e. addition in (Z/p)^D.
struct DigitSpace {
  u64 p;
  int dim;
  u64 size;

  u64 add(u64 a, u64 b) const {
    u64 out = 0, place = 1;
    for (int i = 0; i < dim; ++i) {
      const u64 d = (a % p + b % p) % p;
      out += d * place;
      place *= p;
      a /= p;
      b /= p;
    }
    return out;
  }

  u64 neg(u64 a) const {
    u64 out = 0, place = 1;
    for (int i = 0; i < dim; ++i) {
      out += ((p - a % p) % p) * place;
      place *= p;
      a /= p;
    }
    return out;
  }
};

struct Tables {
  DigitSpace space;
  std::vector<signed char> lambda;   // quadratic character by index
  std::vector<std::uint32_t> cubes;  // number of x with x^3 = y
  std::vector<std::uint32_t> cube_of;  // index of x^3
  std::vector<std::uint32_t> image;  // multiplicity of u as t^q - t
};

Tables build_tables(const TwistParams& params, int n, u64 cap, bool need_cube_of) {
  const int dim = params.nu * n;
  const u64 size = arith::checked_pow(params.p, static_cast<u64>(dim), cap);
  if (size == 0 || dim > ff::kMaxDegree) {
    throw Error(ErrorKind::CapExceeded, "oracle field p^" + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
  }
  const int degs[] = {dim};
  ff::TowerOptions opts;
  opts.ambient_cap = size;
  opts.table_cap = 0;
  const ff::Field field = ff::Field::build_tower(params.p, degs, opts);

  Tables t{DigitSpace{params.p, dim, size}, {}, {}, {}, {}};
  t.lambda.assign(size, 0);
  t.cubes.assign(size, 0);
  if (need_cube_of) t.cube_of.assign(size, 0);
  t.cubes[0] = 1;
  const ff::Element g = field.generator();
  const ff::Element g3 = field.pow(g, 3);
  ff::Element y = field.one();   // g^e
  ff::Element y3 = field.one();  // g^(3e)
  for (u64 e = 0; e + 1 < size; ++e) {
    const u64 yi = field.index(y);
    const u64 y3i = field.index(y3);
    t.lambda[yi] = (e % 2 == 0) ? 1 : -1;
    ++t.cubes[y3i];
    if (need_cube_of) t.cube_of[yi] = static_cast<std::uint32_t>(y3i);
    y = field.mul(y, g);
    y3 = field.mul(y3, g3);
  }

  // t -> t^q - t is F_p-linear: build its values from the basis images
  std::vector<u64> basis_image(static_cast<std::size_t>(dim));
  std::vector<u64> powers(static_cast<std::size_t>(dim) + 1, 1);
  for (int k = 0; k < dim; ++k) {
    const ff::Element e = field.from_index(powers[k]);
    basis_image[k] = field.index(field.sub(field.frobenius(e, params.f), e));
    powers[k + 1] = powers[k] * params.p;
  }
  std::vector<std::uint32_t> values(size, 0);
  t.image.assign(size, 0);
  t.image[0] = 1;
  for (u64 idx = 1; idx < size; ++idx) {
    int k = 0;
    while ((idx / powers[k]) % params.p == 0) ++k;
    values[idx] = static_cast<std::uint32_t>(t.space.add(values[idx - powers[k]], basis_image[k]));
    ++t.image[values[idx]];
  }
  const u64 fiber = arith::checked_pow(params.p, static_cast<u64>(std::gcd(dim, params.f)), ~u64{0});
  for (u64 u = 0; u < size; ++u) {
    if (t.image[u] != 0 && t.image[u] != fiber) identity_failure("fiber of t^q - t has the wrong size");
  }
  return t;
}

// Prime l = 1 mod p just below 2^61, and a primitive p-th root of unity mod l.
std::pair<u64, u64> ntt_prime(u64 p) {
  for (u64 k = ((u64{1} << 61) - 1) / p; k > 0; --k) {
    const u64 l = k * p + 1;
    if (!arith::is_prime(l)) continue;
    for (u64 a = 2;; ++a) {
      const u64 w = arith::powmod(a, (l - 1) / p, l);
      if (w != 1) return {l, w};
    }
  }
  throw Error(ErrorKind::IdentityFailure, "no transform prime");
}

// In-place DFT over (Z/p)^dim with kernel w^<k, y>.
void dft(std::vector<u64>& a, const DigitSpace& sp, u64 l, u64 w) {
  const u64 p = sp.p;
  std::vector<u64> wp(p);
  wp[0] = 1;
  for (u64 i = 1; i < p; ++i) wp[i] = mulmod(wp[i - 1], w, l);
  std::vector<u64> in(p), out(p);
  u64 stride = 1;
  for (int axis = 0; axis < sp.dim; ++axis) {
    const u64 block = stride * p;
    for (u64 base = 0; base < sp.size; base += block) {
      for (u64 off = 0; off < stride; ++off) {
        for (u64 i = 0; i < p; ++i) in[i] = a[base + off + i * stride];
        for (u64 k = 0; k < p; ++k) {
          unsigned __int128 acc = 0;
          for (u64 i = 0; i < p; ++i) acc += static_cast<unsigned __int128>(in[i]) * wp[(k * i) % p];
          out[k] = static_cast<u64>(acc % l);
        }
        for (u64 k = 0; k < p; ++k) a[base + off + k * stride] = out[k];
      }
    }
    stride = block;
  }
}

mpz_class transform_path(const Tables& t) {
  const DigitSpace& sp = t.space;
  const auto [l, w] = ntt_prime(sp.p);
  std::vector<u64> A(sp.size), B(sp.size);
  for (u64 i = 0; i < sp.size; ++i) {
    A[i] = t.cubes[i];
    B[i] = t.lambda[i] < 0 ? l - 1 : static_cast<u64>(t.lambda[i]);
  }
  dft(A, sp, l, w);
  dft(B, sp, l, w);
  std::vector<u64> C(sp.size);
  for (u64 k = 0; k < sp.size; ++k) C[k] = mulmod(B[k], A[sp.neg(k)], l);
  dft(C, sp, l, arith::invmod(w, l));
  const u64 n_inv = arith::invmod(sp.size % l, l);
  __int128 total = 0;
  for (u64 u = 0; u < sp.size; ++u) {
    if (t.image[u] == 0) continue;
    const u64 s_mod = mulmod(C[u], n_inv, l);
    const __int128 s = s_mod > l / 2 ? static_cast<__int128>(s_mod) - static_cast<__int128>(l) : s_mod;
    if (s > static_cast<__int128>(sp.size) || -s > static_cast<__int128>(sp.size)) {
      identity_failure("transform value outside [-N, N]");
    }
    total += s * t.image[u];
  }
  const bool neg = total < 0;
  const unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-total) : static_cast<unsigned __int128>(total);
  mpz_class out = (mpz_class(static_cast<unsigned long>(mag >> 64)) << 64) +
                  mpz_class(static_cast<unsigned long>(mag & ~std::uint64_t{0}));
  return neg ? mpz_class(-out) : out;
}

mpz_class naive_path(const Tables& t) {
  const DigitSpace& sp = t.space;
  long long total = 0;
  for (u64 u = 0; u < sp.size; ++u) {
    if (t.image[u] == 0) continue;
    long long s = 0;
    for (u64 x = 0; x < sp.size; ++x) s += t.lambda[sp.add(t.cube_of[x], u)];
    total += s * static_cast<long long>(t.image[u]);
  }
  return mpz_class(static_cast<long>(total));
}

}  // namespace

mpz_class oracle_coefficient(const TwistParams& params, int n, OraclePath path, u64 cap) {
  if (n < 1) throw Error(ErrorKind::Validation, "oracle index must be positive");
  const Tables t = build_tables(params, n, cap, path == OraclePath::Naive);
  return path == OraclePath::Transform ? transform_path(t) : naive_path(t);
}

std::vector<mpz_class> taylor_oracle(const TwistParams& params, int n_max, OraclePath path, u64 cap) {
  std::vector<mpz_class> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(oracle_coefficient(params, n, path, cap));
  return out;
}

}  // namespace astwist
