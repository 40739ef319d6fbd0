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


#ifndef ASTWIST_CHARACTERS_HPP
#define ASTWIST_CHARACTERS_HPP

// Multiplicative characters chi_{F,n}^i and additive characters psi_alpha of
// the subfields of one ambient field, valued in Z[zeta_{6p}].
//
// chi_{F,n} sends the subfield generator h_F = g^((p^M-1)/(Q-1)) to
// zeta_n, so chi_{F',n} = chi_{F,n} o N_{F'/F} holds on the nose.
// psi_alpha(x) = zeta_p^(s * Tr(alpha x)) where s is the psi unit.

#include <cstdint>

#include "astwist/cyclo.hpp"
#include "astwist/ff.hpp"

namespace astwist {

/// chi_{F,order}^power on F = F_{p^field_degree}.
struct MultChar {
  int field_degree = 1;
  int order = 1;
  int power = 1;

  bool trivial() const { return ((power % order) + order) % order == 0; }
};

/// psi_shift on F = F_{p^field_degree}.
struct AddChar {
  int field_degree = 1;
  ff::Element shift;
};

class CharacterSystem {
 public:
  /// psi_unit in [1, p) picks zeta_p^psi_unit as the image of 1.
  explicit CharacterSystem(const ff::Field& field, int psi_unit = 1);

  const ff::Field& field() const noexcept { return *field_; }
  int conductor() const noexcept { return conductor_; }
  int psi_unit() const noexcept { return psi_unit_; }

  /// Exponent e with chi(x) = zeta_{6p}^e. Throws ZeroElement,
  /// OrderNotDividing, NotASubfield.
  int mult_exponent(const MultChar& chi, const ff::Element& x) const;
  cyclo::CycloInt mult_eval(const MultChar& chi, const ff::Element& x) const;

  /// Exponent e with psi(x) = zeta_{6p}^e.
  int add_exponent(const AddChar& psi, const ff::Element& x) const;
  cyclo::CycloInt add_eval(const AddChar& psi, const ff::Element& x) const;

  /// Validates chi against its field: order divides 6 and Q - 1.
  void check(const MultChar& chi) const;

 private:
  const ff::Field* field_;
  int conductor_;
  int psi_unit_;
};

}  // namespace astwist

#endif
