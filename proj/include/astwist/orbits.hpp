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


#ifndef ASTWIST_ORBITS_HPP
#define ASTWIST_ORBITS_HPP

// Orbits of <r> on S_{n,q} = (Z/n minus 0) x F_q^x under
// r.(i, alpha) = (r i, alpha^(1/r)).
//
// alpha is recorded by its exponent j against the generator h_q of F_q^x,
// so alpha^(1/r) is j * r^{-1} mod (q - 1) and the whole combinatorics is
// independent of any field model.

#include <compare>
#include <cstdint>
#include <vector>

namespace astwist {

using u64 = std::uint64_t;

struct TwistParams {
  u64 p = 0;
  int nu = 1;
  int f = 1;
  u64 r = 0;
  u64 q = 0;

  /// Throws NonPrime, Validation, CapExceeded (q or r beyond 2^62).
  static TwistParams make(u64 p, int nu, int f);

  int p_mod6() const { return static_cast<int>(p % 6); }
  int r_mod6() const { return static_cast<int>(r % 6); }
  bool supersingular() const { return p % 6 == 5; }
};

struct OrbitPoint {
  int i = 0;
  u64 j = 0;  // alpha = h_q^j

  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
  friend auto operator<=>(const OrbitPoint&, const OrbitPoint&) = default;
};

struct Orbit {
  int n = 0;
  OrbitPoint rep;
  int size = 0;
  /// rep, r.rep, r^2.rep, ...
  std::vector<OrbitPoint> elements;
  /// [F_p(alpha) : F_p].
  int alpha_degree = 1;
};

/// Orbit of <r> on (Z/6)^x.
struct NOrbit {
  std::vector<int> elements;
  int size() const { return static_cast<int>(elements.size()); }
};

/// [F_p(h_q^j) : F_p].
int alpha_degree(const TwistParams& params, u64 j);

/// The orbit through pt, with canonical (minimal) representative first.
Orbit orbit_of(const TwistParams& params, int n, OrbitPoint pt);

/// lcm(ord of r on i mod n, [F_r(alpha):F_r]) computed in closed form.
int orbit_size_formula(const TwistParams& params, int n, OrbitPoint pt);

/// All orbits on S (or S^x), sorted by representative. Throws CapExceeded
/// when n (q - 1) exceeds enum_cap.
std::vector<Orbit> enumerate_orbits(const TwistParams& params, int n, bool units_only, u64 enum_cap = 10'000'000);

/// pi_target(o): orbit of (i mod target_n, alpha).
Orbit project(const TwistParams& params, const Orbit& o, int target_n);

/// The orbit through (-i, alpha).
Orbit conjugate_orbit(const TwistParams& params, const Orbit& o);

/// N_{r,6}, sorted.
std::vector<NOrbit> n_orbits(const TwistParams& params);

/// rho_6(o): the orbit of <r> on (Z/6)^x containing i.
NOrbit rho6(const TwistParams& params, const Orbit& o);

struct Multipliers {
  int m2 = 1;
  int n6 = 1;
};
Multipliers multipliers(const TwistParams& params, const Orbit& o);

/// Degrees over F_p of every field the L-function constructions touch.
std::vector<int> required_degrees(const TwistParams& params, const std::vector<Orbit>& orbits6);

}  // namespace astwist

#endif
