// Copyright 2026 The moduli-sep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotADiscriminant : public Error {
 public:
  explicit NotADiscriminant(long n)
      : Error("not an imaginary quadratic discriminant: " + std::to_string(n)),
        value(n) {}
  long value;
};

// Raised when the escalation ladder reaches the precision cap before the
// requested radius (or rounding gate) is met.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& what, long cap_bits)
      : Error(what + " (cap " + std::to_string(cap_bits) + " bits)"),
        cap(cap_bits) {}
  long cap;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

class ReconstructionFailed : public Error {
 public:
  using Error::Error;
};

class NotInClassifiedList : public Error {
 public:
  NotInClassifiedList(long dx, long dy)
      : Error("pair (" + std::to_string(dx) + ", " + std::to_string(dy) +
              ") is not among the classified cross-discriminant pairs") {}
};

class InvalidAlpha : public Error {
 public:
  using Error::Error;
};

}  // namespace moduli
