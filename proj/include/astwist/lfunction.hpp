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


#ifndef ASTWIST_LFUNCTION_HPP
#define ASTWIST_LFUNCTION_HPP

// L(E, T) as a product over orbits, in the Artin-Schreier form
// prod (1 - G(pi_2 o)^{m_2} G(pi_3 o) T^|o|) and the sextic-twist form
// prod (1 - J(rho_6 o)^{n_6} G(o) T^|o|), plus rank and special value.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "astwist/context.hpp"
#include "astwist/cyclo.hpp"
#include "astwist/orbits.hpp"

namespace astwist {

struct LPolynomial {
  TwistParams params;
  std::vector<mpz_class> coeffs;  // constant term first

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const LPolynomial& a, const LPolynomial& b) { return a.coeffs == b.coeffs; }
};

struct OrbitFactor {
  Orbit orbit;
  cyclo::CycloInt omega;
  /// omega = r^|o|
  bool unitary_root = false;
};

std::vector<OrbitFactor> as_factors(const TwistContext& ctx);
std::vector<OrbitFactor> st_factors(const TwistContext& ctx);

/// prod (1 - omega T^|o|) with every coefficient forced to Z. Throws
/// NotRational.
LPolynomial expand(const TwistParams& params, int conductor, const std::vector<OrbitFactor>& factors);

LPolynomial l_poly_orbit(const TwistContext& ctx);
LPolynomial l_poly_sextic(const TwistContext& ctx);

/// c_1..c_nmax with -log L = sum c_n T^n / n.
std::vector<mpz_class> taylor_from_poly(const LPolynomial& L, int n_max);

/// Multiplicity of the root T = 1/r.
int analytic_rank(const LPolynomial& L);
/// L(T) / (1 - rT)^rank at T = 1/r.
mpq_class special_value(const LPolynomial& L);

/// w in {+1, -1} with a_{d-k} = w r^{d-2k} a_k for all k, or 0 if neither.
int functional_equation_sign(const LPolynomial& L);

struct OrbitPartition {
  std::vector<Orbit> unitary;      // omega(o) = r^|o|
  std::vector<Orbit> non_unitary;  // the rest
};
OrbitPartition orbit_partition(const std::vector<OrbitFactor>& factors);

/// Largest deviation of |omega(o)| / r^|o| from 1 over all embeddings.
long double weil_deviation(const std::vector<OrbitFactor>& factors, u64 r);

/// 64-bit FNV-1a over the decimal coefficients, as 16 hex digits.
std::string digest(const LPolynomial& L);

}  // namespace astwist

#endif
