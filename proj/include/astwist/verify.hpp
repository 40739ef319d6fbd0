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


#ifndef ASTWIST_VERIFY_HPP
#define ASTWIST_VERIFY_HPP

// The invariant suite run by `astwist verify`, grouped so that a subset can
// be selected.

#include <set>
#include <string>
#include <vector>

#include "astwist/bsd.hpp"
#include "astwist/context.hpp"

namespace astwist {

/// gauss, lfun, oracle, orbits, rank, ord, sha, choice, bs.
const std::vector<std::string>& verify_groups();

/// Group of a check emitted by build_report.
std::string group_of(const std::string& check_name);

struct GridPoint {
  u64 p = 0;
  int nu = 1;
  int f = 1;
};

const std::vector<GridPoint>& default_grid();

struct VerifyCheck {
  GridPoint point;
  std::string group;
  CheckResult result;
};

struct VerifyOptions {
  std::set<std::string> only;  // empty means all groups
  int oracle_max = 4;
  Caps caps;
};

/// Gauss and Jacobi sum identities on one parameter set.
std::vector<CheckResult> gauss_checks(const TwistContext& ctx);

/// Orbit partition, size formula and structure-map checks.
std::vector<CheckResult> orbit_checks(const TwistContext& ctx);

/// Same L-polynomial and dossier under another generator and psi unit.
std::vector<CheckResult> choice_checks(const TwistContext& ctx, const BsdReport& report);

std::vector<VerifyCheck> run_verify(const std::vector<GridPoint>& grid, const VerifyOptions& options);

}  // namespace astwist

#endif
