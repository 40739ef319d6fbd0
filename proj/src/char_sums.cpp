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


#include "astwist/char_sums.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "astwist/arith.hpp"
#include "astwist/error.hpp"

namespace astwist {

namespace {

const ff::Subfield& enumerable_subfield(const ff::Field& field, int degree, u64 enum_cap) {
  if (!field.has_subfield(degree)) {
    throw Error(ErrorKind::FieldMissing, "F_{p^" + std::to_string(degree) + "} is not in the tower");
  }
  const ff::Subfield& sf = field.subfield(degree);
  if (sf.size > enum_cap) {
    throw Error(ErrorKind::CapExceeded, "enumeration of a field of size " + std::to_string(sf.size));
  }
  return sf;
}

int norm_power(int power, int order) { return ((power % order) + order) % order; }

}  // namespace

GaussSumValue gauss_sum(const CharacterSystem& cs, const MultChar& chi, const AddChar& psi, u64 enum_cap) {
  cs.check(chi);
  if (chi.trivial()) throw Error(ErrorKind::TrivialCharacter, "Gauss sum of the trivial character");
  if (psi.field_degree != chi.field_degree) throw Error(ErrorKind::Validation, "characters on different fields");
  const ff::Field& field = cs.field();
  if (field.is_zero(psi.shift)) throw Error(ErrorKind::Validation, "trivial additive character");
  if (!field.contains(psi.shift, psi.field_degree)) throw Error(ErrorKind::Validation, "shift outside the field");
  const ff::Subfield& sf = enumerable_subfield(field, chi.field_degree, enum_cap);

  const int m = cs.conductor();
  const u64 p = field.characteristic();
  const int n = chi.order;
  const int step = m / n;
  const int power = norm_power(chi.power, n);
  const u64 s = static_cast<u64>(cs.psi_unit());
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  ff::Element y = psi.shift;  // alpha h^j
  int chi_j = 0;              // i j mod n
  for (u64 j = 0; j + 1 < sf.size; ++j) {
    const u64 tr = field.absolute_trace(y, chi.field_degree);
    const int e = (step * chi_j + 6 * static_cast<int>((tr * s) % p)) % m;
    ++counts[static_cast<std::size_t>(e)];
    y = field.mul(y, sf.generator);
    chi_j = (chi_j + power) % n;
  }
  GaussSumValue out;
  out.value = -cyclo::CycloInt::from_zeta_counts(m, counts);
  out.field_size = sf.size;
  out.chi = chi;
  out.psi = psi;
  return out;
}

cyclo::CycloInt jacobi_sum_direct(const CharacterSystem& cs, const MultChar& chi1, const MultChar& chi2,
                                  u64 enum_cap) {
  cs.check(chi1);
  cs.check(chi2);
  if (chi1.field_degree != chi2.field_degree) throw Error(ErrorKind::Validation, "characters on different fields");
  const ff::Field& field = cs.field();
  const ff::Subfield& sf = enumerable_subfield(field, chi1.field_degree, enum_cap);
  const int m = cs.conductor();
  const int n1 = chi1.order, n2 = chi2.order;
  const int pw1 = norm_power(chi1.power, n1), pw2 = norm_power(chi2.power, n2);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  const ff::Element one = field.one();
  ff::Element x = one;
  int chi1_j = 0;
  for (u64 j = 0; j + 1 < sf.size; ++j) {
    const ff::Element w = field.sub(one, x);
    if (!field.is_zero(w)) {
      const u64 k = field.dlog(w) / sf.cofactor;
      const int chi2_k = static_cast<int>((k % static_cast<u64>(n2)) * static_cast<u64>(pw2) % static_cast<u64>(n2));
      const int e = ((m / n1) * chi1_j + (m / n2) * chi2_k) % m;
      ++counts[static_cast<std::size_t>(e)];
    }
    x = field.mul(x, sf.generator);
    chi1_j = (chi1_j + pw1) % n1;
  }
  return -cyclo::CycloInt::from_zeta_counts(m, counts);
}

JacobiSumValue jacobi_sum(const CharacterSystem& cs, const MultChar& chi1, const MultChar& chi2, u64 enum_cap) {
  if (chi1.field_degree != chi2.field_degree) throw Error(ErrorKind::Validation, "characters on different fields");
  // chi1 chi2 as a character of order lcm(n1, n2)
  const int n = std::lcm(chi1.order, chi2.order);
  const MultChar prod{chi1.field_degree, n, chi1.power * (n / chi1.order) + chi2.power * (n / chi2.order)};
  if (chi1.trivial() || chi2.trivial() || prod.trivial()) {
    throw Error(ErrorKind::DegenerateCharacters, "Jacobi sum needs chi1, chi2, chi1 chi2 nontrivial");
  }
  JacobiSumValue out;
  out.value = jacobi_sum_direct(cs, chi1, chi2, enum_cap);
  out.field_size = cs.field().subfield(chi1.field_degree).size;
  out.chi1 = chi1;
  out.chi2 = chi2;

  const AddChar psi{chi1.field_degree, cs.field().one()};
  const auto g1 = gauss_sum(cs, chi1, psi, enum_cap).value;
  const auto g2 = gauss_sum(cs, chi2, psi, enum_cap).value;
  const auto g12 = gauss_sum(cs, prod, psi, enum_cap).value;
  if (out.value * g12 != g1 * g2) identity_failure("J G(chi1 chi2) != G(chi1) G(chi2)");
  return out;
}

ff::Element alpha_element(const ff::Field& field, const TwistParams& params, u64 j) {
  if (!field.has_subfield(params.f)) throw Error(ErrorKind::FieldMissing, "F_q is not in the tower");
  return field.pow(field.subfield(params.f).generator, j);
}

GaussSumValue orbit_gauss(const CharacterSystem& cs, const TwistParams& params, const Orbit& o, u64 enum_cap) {
  const int degree = params.nu * o.size;
  if (!cs.field().has_subfield(degree)) {
    throw Error(ErrorKind::FieldMissing, "F_{r^" + std::to_string(o.size) + "} is not in the tower");
  }
  const MultChar chi{degree, o.n, o.rep.i};
  const AddChar psi{degree, alpha_element(cs.field(), params, o.rep.j)};
  return gauss_sum(cs, chi, psi, enum_cap);
}

JacobiSumValue orbit_jacobi(const CharacterSystem& cs, const TwistParams& params, const NOrbit& rho, u64 enum_cap) {
  const int degree = params.nu * rho.size();
  if (!cs.field().has_subfield(degree)) throw Error(ErrorKind::FieldMissing, "Jacobi field missing");
  const int i = rho.elements.front();
  return jacobi_sum(cs, MultChar{degree, 2, -i}, MultChar{degree, 3, -i}, enum_cap);
}

mpq_class stickelberger_ord(u64 p, int mu, const mpz_class& s) {
  mpz_class top;
  mpz_ui_pow_ui(top.get_mpz_t(), p, static_cast<unsigned long>(mu));
  top -= 1;
  if (s <= 0 || s >= top) throw Error(ErrorKind::OutOfRange, "Stickelberger exponent " + s.get_str());
  mpz_class v = s;
  mpz_class digits = 0;
  mpz_class r;
  while (v > 0) {
    r = v % p;
    digits += r;
    v /= p;
  }
  mpq_class out(digits, mpz_class(p - 1));
  out.canonicalize();
  return out;
}

GaussPower gauss_power_decompose(const CharacterSystem& cs, const TwistParams& params, const Orbit& o,
                                 u64 enum_cap) {
  const ff::Field& field = cs.field();
  const int n = o.n;
  const int c = static_cast<int>(arith::multiplicative_order(params.p % static_cast<u64>(n), static_cast<u64>(n)));
  const int degree = params.nu * o.size;
  if (degree % c != 0) identity_failure("c does not divide nu |o|");
  GaussPower out;
  out.c = c;
  out.exponent = degree / c;
  const ff::Element alpha = alpha_element(field, params, o.rep.j);
  out.zeta = cs.mult_eval(MultChar{degree, n, -o.rep.i}, alpha);
  out.g = gauss_sum(cs, MultChar{c, n, o.rep.i}, AddChar{c, field.one()}, enum_cap).value;
  const auto direct = orbit_gauss(cs, params, o, enum_cap).value;
  if (out.zeta * out.g.pow(static_cast<unsigned long>(out.exponent)) != direct) {
    identity_failure("G(o) != zeta g^(nu|o|/c)");
  }
  return out;
}

}  // namespace astwist
