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


#ifndef ASTWIST_ORACLE_HPP
#define ASTWIST_ORACLE_HPP

// Point-count oracle for L(E, T): c_n = sum_{t, x in F_{r^n}} lambda(x^3 + t^q - t)
// with lambda the quadratic character, computed without any Gauss sum.
//
// The t-loop collapses to the image of the F_p-linear map t -> t^q - t, and
// s(u) = sum_x lambda(x^3 + u) is computed for every u at once as a
// correlation over the additive group (Z/p)^D, by an exact number-theoretic
// transform modulo a prime l = 1 mod p. The naive path sums s(u) directly.

#include <gmpxx.h>

#include <vector>

#include "astwist/orbits.hpp"

namespace astwist {

enum class OraclePath { Transform, Naive };

/// c_n. Throws CapExceeded when r^n exceeds cap, IdentityFailure when a fiber
/// of t -> t^q - t has the wrong size.
mpz_class oracle_coefficient(const TwistParams& params, int n, OraclePath path, u64 cap);

/// c_1..c_nmax.
std::vector<mpz_class> taylor_oracle(const TwistParams& params, int n_max, OraclePath path, u64 cap);

}  // namespace astwist

#endif
