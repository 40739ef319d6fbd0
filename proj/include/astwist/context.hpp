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


#ifndef ASTWIST_CONTEXT_HPP
#define ASTWIST_CONTEXT_HPP

// Everything one parameter set needs: the tower, the characters, the orbit
// tables and memoized orbit sums.

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "astwist/char_sums.hpp"
#include "astwist/characters.hpp"
#include "astwist/ff.hpp"
#include "astwist/orbits.hpp"

namespace astwist {

struct Caps {
  u64 ambient = u64{1} << 40;
  u64 enumeration = 10'000'000;
  u64 oracle = 10'000'000;
  u64 oracle_naive = 100'000;
  u64 table = u64{1} << 20;

  /// Overrides from ASTWIST_CAP_AMBIENT, ASTWIST_CAP_ENUM, ASTWIST_CAP_ORACLE.
  /// Throws Validation on malformed or zero values.
  Caps with_env() const;
};

struct Choices {
  int generator_rank = 0;
  int psi_unit = 1;
};

class TwistContext {
 public:
  TwistContext(const TwistParams& params, const Caps& caps = {}, const Choices& choices = {});
  TwistContext(const TwistContext&) = delete;
  TwistContext& operator=(const TwistContext&) = delete;

  const TwistParams& params() const noexcept { return params_; }
  const Caps& caps() const noexcept { return caps_; }
  const Choices& choices() const noexcept { return choices_; }
  const ff::Field& field() const noexcept { return *field_; }
  const CharacterSystem& chars() const noexcept { return *chars_; }
  int conductor() const noexcept { return chars_->conductor(); }

  /// O^x_{r,6,q}, sorted by representative.
  const std::vector<Orbit>& orbits6() const noexcept { return orbits6_; }
  const std::vector<NOrbit>& norbits() const noexcept { return norbits_; }

  ff::Element alpha(u64 j) const { return alpha_element(*field_, params_, j); }

  /// Memoized G(o) and J(rho).
  const cyclo::CycloInt& gauss(const Orbit& o) const;
  const cyclo::CycloInt& jacobi(const NOrbit& rho) const;

 private:
  TwistParams params_;
  Caps caps_;
  Choices choices_;
  std::vector<Orbit> orbits6_;
  std::vector<NOrbit> norbits_;
  std::unique_ptr<ff::Field> field_;
  std::unique_ptr<CharacterSystem> chars_;
  mutable std::map<std::pair<int, OrbitPoint>, cyclo::CycloInt> gauss_cache_;
  mutable std::map<int, cyclo::CycloInt> jacobi_cache_;
};

}  // namespace astwist

#endif
