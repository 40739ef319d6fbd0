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


#ifndef ASTWIST_ERROR_HPP
#define ASTWIST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace astwist {

enum class ErrorKind {
  NonPrime,
  CapExceeded,
  NotASubfield,
  ZeroElement,
  ConductorMismatch,
  BadEmbedding,
  NotRational,
  ZeroValue,
  TrivialCharacter,
  DegenerateCharacters,
  OrderNotDividing,
  FieldMissing,
  OutOfRange,
  WrongResidue,
  Validation,
  IdentityFailure,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when an identity that must hold exactly is violated.
[[noreturn]] inline void identity_failure(const std::string& what) {
  throw Error(ErrorKind::IdentityFailure, what);
}

}  // namespace astwist

#endif
