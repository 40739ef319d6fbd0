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


#ifndef ASTWIST_BSD_HPP
#define ASTWIST_BSD_HPP

// BSD invariants read off L(E, T): rank, L*, Reg |Sha| = L* r^floor(q/6),
// epsilon_o for p = 5 mod 6, structural constants and the Brauer-Siegel
// ratio. Reg and |Sha| are never separated.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "astwist/context.hpp"
#include "astwist/cyclo.hpp"
#include "astwist/lfunction.hpp"
#include "astwist/orbits.hpp"

namespace astwist {

/// epsilon_o = lambda(alpha) (-1)^((p+1) nu |o| / 4) chi_{F,3}^{-i}(alpha), with
/// lambda the quadratic character of F = F_{r^|o|}, checked against
/// omega(o) = epsilon_o r^|o|. Throws WrongResidue, IdentityFailure.
cyclo::CycloInt epsilon(const TwistContext& ctx, const Orbit& o, const cyclo::CycloInt& omega);

struct EpsilonClass {
  int size = 0;
  int zeta6_exponent = 0;  // epsilon = zeta_6^e
  int count = 0;
};

/// Multiset of (|o|, epsilon_o) over O^x, sorted. Empty for p = 1 mod 6.
std::vector<EpsilonClass> epsilon_table(const TwistContext& ctx, const std::vector<OrbitFactor>& factors);

/// 0 for p = 1 mod 6; else #{o : epsilon_o = 1}, i.e. alpha a cube in
/// F_{r^|o|} and lambda(alpha) = (-1)^((p+1) nu |o| / 4).
int rank_by_formula(const TwistContext& ctx);
/// The count without the lambda(alpha) condition: 8 | (p+1) nu |o| and alpha a
/// cube. Agrees with rank_by_formula whenever every alpha is a square in its F.
int rank_by_formula_literal(const TwistContext& ctx);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// ord_p(L*) = -(q-1) nu / 6 for p = 1 mod 6; L* in Z for p = 5 mod 6; and
/// L* = 1 when 3(q-1) | r-1 and 8 | (p+1) nu.
CheckResult ord_lstar_check(const TwistParams& params, const mpq_class& lstar);

/// True when 3(q-1) | r-1, 8 | (p+1) nu and p = 5 mod 6.
bool full_rank_case(const TwistParams& params);

mpq_class reg_sha(const TwistParams& params, const mpq_class& lstar);

struct StructuralConstants {
  u64 height_exponent = 0;    // ceil(q/6)
  u64 bsd_exponent = 0;       // floor(q/6)
  std::string height_case;    // "(q+5)/6" or "(q+1)/6"
  u64 conductor_degree = 0;   // 2(q+1)
  u64 l_degree = 0;           // conductor degree - 4
  std::string reduction_finite = "II";
  u64 finite_bad_places = 0;  // roots of t^q - t
  std::string reduction_infinity;
  std::string j_invariant = "0";
  std::string discriminant = "-2^4 3^3 (t^q - t)^2";
  int torsion_order = 1;
  int tamagawa_product = 1;
};

StructuralConstants structural_constants(const TwistParams& params);

struct BrauerSiegel {
  long double direct = 0;
  long double decomposed = 0;
};

/// log(reg_sha) / log H and (log L* + floor(q/6) log r) / (ceil(q/6) log r).
BrauerSiegel brauer_siegel(const TwistParams& params, const mpq_class& lstar);

/// Natural log of a positive big rational.
long double log_rational(const mpq_class& v);

struct OrbitEstimates {
  u64 orbit_count = 0;
  long double count_bound = 0;  // |S^x|/x + phi(n) sum_{d <= x} r^d / d
  long double x = 0;
  long double log_size_sum = 0;
  long double log_size_bound = 0;  // log y |O^x| + (log y / y) |S^x|
  long double y = 0;
};

OrbitEstimates orbit_estimates(const TwistParams& params, const std::vector<Orbit>& orbits, int n);

struct BsdReport {
  TwistParams params;
  LPolynomial L;
  int rank = 0;
  int rank_formula = 0;
  int rank_formula_literal = 0;
  mpq_class lstar;
  long ord_p_lstar = 0;
  mpq_class reg_sha;
  long dim_sha = 0;
  int fe_sign = 0;
  StructuralConstants constants;
  BrauerSiegel bs;
  std::vector<EpsilonClass> epsilon;
  std::size_t unitary_orbits = 0;
  std::size_t non_unitary_orbits = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

struct ReportOptions {
  /// Oracle prefix depth; 0 skips the oracle. Terms beyond the oracle cap
  /// are skipped and noted.
  int oracle_max = 0;
};

BsdReport build_report(const TwistContext& ctx, const ReportOptions& options = {});

}  // namespace astwist

#endif
