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


#include "astwist/error.hpp"

namespace astwist {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotASubfield: return "NotASubfield";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ConductorMismatch: return "ConductorMismatch";
    case ErrorKind::BadEmbedding: return "BadEmbedding";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::ZeroValue: return "ZeroValue";
    case ErrorKind::TrivialCharacter: return "TrivialCharacter";
    case ErrorKind::DegenerateCharacters: return "DegenerateCharacters";
    case ErrorKind::OrderNotDividing: return "OrderNotDividing";
    case ErrorKind::FieldMissing: return "FieldMissing";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::WrongResidue: return "WrongResidue";
    case ErrorKind::Validation: return "Validation";
    case ErrorKind::IdentityFailure: return "IdentityFailure";
  }
  return "Unknown";
}

}  // namespace astwist
