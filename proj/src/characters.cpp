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


#include "astwist/characters.hpp"

#include <string>

#include "astwist/error.hpp"

namespace astwist {

CharacterSystem::CharacterSystem(const ff::Field& field, int psi_unit)
    : field_(&field), conductor_(static_cast<int>(6 * field.characteristic())), psi_unit_(psi_unit) {
  const auto p = static_cast<int>(field.characteristic());
  if (psi_unit < 1 || psi_unit >= p) throw Error(ErrorKind::Validation, "psi unit must lie in [1, p)");
}

void CharacterSystem::check(const MultChar& chi) const {
  if (chi.order < 1 || 6 % chi.order != 0) {
    throw Error(ErrorKind::ConductorMismatch, "character order " + std::to_string(chi.order) + " does not divide 6");
  }
  const ff::Subfield& sf = field_->subfield(chi.field_degree);
  if ((sf.size - 1) % static_cast<ff::u64>(chi.order) != 0) {
    throw Error(ErrorKind::OrderNotDividing,
                std::to_string(chi.order) + " does not divide " + std::to_string(sf.size - 1));
  }
}

int CharacterSystem::mult_exponent(const MultChar& chi, const ff::Element& x) const {
  check(chi);
  if (field_->is_zero(x)) throw Error(ErrorKind::ZeroElement, "character at zero");
  const ff::Subfield& sf = field_->subfield(chi.field_degree);
  if (!field_->contains(x, chi.field_degree)) throw Error(ErrorKind::NotASubfield, "argument outside the field");
  const ff::u64 j = field_->dlog(x) / sf.cofactor;
  const long long n = chi.order;
  const long long ij = ((static_cast<long long>(j % static_cast<ff::u64>(n)) * chi.power) % n + n) % n;
  return static_cast<int>(ij * (conductor_ / n));
}

cyclo::CycloInt CharacterSystem::mult_eval(const MultChar& chi, const ff::Element& x) const {
  return cyclo::CycloInt::zeta(conductor_, mult_exponent(chi, x));
}

int CharacterSystem::add_exponent(const AddChar& psi, const ff::Element& x) const {
  const ff::u64 p = field_->characteristic();
  const std::uint32_t tr = field_->absolute_trace(field_->mul(psi.shift, x), psi.field_degree);
  return static_cast<int>(6 * ((static_cast<ff::u64>(tr) * static_cast<ff::u64>(psi_unit_)) % p));
}

cyclo::CycloInt CharacterSystem::add_eval(const AddChar& psi, const ff::Element& x) const {
  return cyclo::CycloInt::zeta(conductor_, add_exponent(psi, x));
}

}  // namespace astwist
