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


#ifndef ASTWIST_CHAR_SUMS_HPP
#define ASTWIST_CHAR_SUMS_HPP

// Gauss and Jacobi sums by exact enumeration, orbit sums G(o) and J(o), and
// Stickelberger digit valuations.

#include <gmpxx.h>

#include <cstdint>

#include "astwist/characters.hpp"
#include "astwist/cyclo.hpp"
#include "astwist/orbits.hpp"

namespace astwist {

inline constexpr u64 kDefaultEnumCap = 10'000'000;

struct GaussSumValue {
  cyclo::CycloInt value;
  u64 field_size = 0;
  MultChar chi;
  AddChar psi;
};

struct JacobiSumValue {
  cyclo::CycloInt value;
  u64 field_size = 0;
  MultChar chi1;
  MultChar chi2;
};

/// G_F(chi, psi) = -sum_{x in F^x} chi(x) psi(x). Throws TrivialCharacter,
/// CapExceeded, Validation (zero shift or shift outside F).
GaussSumValue gauss_sum(const CharacterSystem& cs, const MultChar& chi, const AddChar& psi,
                        u64 enum_cap = kDefaultEnumCap);

/// J_F(chi1, chi2) = -sum_x chi1(x) chi2(1 - x) without the Gauss-sum check.
cyclo::CycloInt jacobi_sum_direct(const CharacterSystem& cs, const MultChar& chi1, const MultChar& chi2,
                                  u64 enum_cap = kDefaultEnumCap);

/// Jacobi sum, checked against J G(chi1 chi2) = G(chi1) G(chi2). Throws
/// DegenerateCharacters, IdentityFailure.
JacobiSumValue jacobi_sum(const CharacterSystem& cs, const MultChar& chi1, const MultChar& chi2,
                          u64 enum_cap = kDefaultEnumCap);

/// h_q^j as an ambient element.
ff::Element alpha_element(const ff::Field& field, const TwistParams& params, u64 j);

/// G(o) = G_F(chi_{F,n}^i, psi_alpha), F = F_{r^|o|}. Throws FieldMissing.
GaussSumValue orbit_gauss(const CharacterSystem& cs, const TwistParams& params, const Orbit& o,
                          u64 enum_cap = kDefaultEnumCap);

/// J(rho) = J_F(chi_{F,2}^{-i}, chi_{F,3}^{-i}), F = F_{r^|rho|}, i the least
/// element of rho.
JacobiSumValue orbit_jacobi(const CharacterSystem& cs, const TwistParams& params, const NOrbit& rho,
                            u64 enum_cap = kDefaultEnumCap);

/// Digit sum of s in base p over (p - 1). Throws OutOfRange unless
/// 0 < s < p^mu - 1.
mpq_class stickelberger_ord(u64 p, int mu, const mpz_class& s);

struct GaussPower {
  cyclo::CycloInt zeta;  // chi^{-i}(alpha), a root of unity
  cyclo::CycloInt g;     // G_{F_{p^c}}(chi^i, psi_1)
  int c = 1;
  int exponent = 1;      // nu |o| / c
};

/// G(o) = zeta g^exponent, verified in the ring. Throws IdentityFailure.
GaussPower gauss_power_decompose(const CharacterSystem& cs, const TwistParams& params, const Orbit& o,
                                 u64 enum_cap = kDefaultEnumCap);

}  // namespace astwist

#endif
