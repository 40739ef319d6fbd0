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


#include "astwist/context.hpp"

#include <cstdlib>
#include <string>

#include "astwist/error.hpp"

namespace astwist {

namespace {

void env_override(const char* name, u64& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw Error(ErrorKind::Validation, std::string(name) + " must be a positive integer");
  }
  slot = v;
}

}  // namespace

Caps Caps::with_env() const {
  Caps out = *this;
  env_override("ASTWIST_CAP_AMBIENT", out.ambient);
  env_override("ASTWIST_CAP_ENUM", out.enumeration);
  env_override("ASTWIST_CAP_ORACLE", out.oracle);
  return out;
}

TwistContext::TwistContext(const TwistParams& params, const Caps& caps, const Choices& choices)
    : params_(params), caps_(caps), choices_(choices) {
  orbits6_ = enumerate_orbits(params_, 6, true, caps_.enumeration);
  norbits_ = n_orbits(params_);
  const std::vector<int> degrees = required_degrees(params_, orbits6_);
  ff::TowerOptions opts;
  opts.ambient_cap = caps_.ambient;
  opts.generator_rank = choices_.generator_rank;
  opts.table_cap = caps_.table;
  field_ = std::make_unique<ff::Field>(ff::Field::build_tower(params_.p, degrees, opts));
  chars_ = std::make_unique<CharacterSystem>(*field_, choices_.psi_unit);
}

const cyclo::CycloInt& TwistContext::gauss(const Orbit& o) const {
  const auto key = std::make_pair(o.n, o.rep);
  auto it = gauss_cache_.find(key);
  if (it != gauss_cache_.end()) return it->second;
  auto value = orbit_gauss(*chars_, params_, o, caps_.enumeration).value;
  return gauss_cache_.emplace(key, std::move(value)).first->second;
}

const cyclo::CycloInt& TwistContext::jacobi(const NOrbit& rho) const {
  const int key = rho.elements.front();
  auto it = jacobi_cache_.find(key);
  if (it != jacobi_cache_.end()) return it->second;
  auto value = orbit_jacobi(*chars_, params_, rho, caps_.enumeration).value;
  return jacobi_cache_.emplace(key, std::move(value)).first->second;
}

}  // namespace astwist
