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

// Imaginary quadratic discriminants and reduced binary quadratic forms.

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "moduli/ball.hpp"

namespace moduli {

// value = fundamental * conductor^2, value < 0.
struct Discriminant {
  long value = 0;
  long fundamental = 0;
  long conductor = 0;

  long abs() const { return -value; }
  friend bool operator==(const Discriminant&, const Discriminant&) = default;
};

// Throws NotADiscriminant unless n < 0 and n = 0, 1 (mod 4).
Discriminant validate_discriminant(long n);

// Largest s with s^2 | n, for n >= 1. Trial division.
long square_part_root(long n);

enum class Dominance { kDominant, kSubdominant, kGeneric };
const char* to_string(Dominance d);

// Reduced primitive form a X^2 + b XY + c Y^2 with b^2 - 4ac = disc.value.
struct ReducedForm {
  long a = 0;
  long b = 0;
  long c = 0;
  Discriminant disc;

  Dominance dominance() const {
    return a == 1 ? Dominance::kDominant
                  : (a == 2 ? Dominance::kSubdominant : Dominance::kGeneric);
  }
  // The class is its own inverse; the singular modulus is then real.
  bool is_ambiguous() const { return b == 0 || a == b || a == c; }
  std::string to_string() const;
  friend bool operator==(const ReducedForm& x, const ReducedForm& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

// All reduced forms, sorted by (a, b).
std::vector<ReducedForm> reduced_forms(const Discriminant& d);
long class_number(const Discriminant& d);

struct DominanceCensus {
  int dominant = 0;
  int subdominant = 0;
};
DominanceCensus dominance_census(const Discriminant& d);

// The CM point tau = (b + sqrt(disc)) / 2a in the fundamental domain.
CertifiedComplex cm_point(const ReducedForm& f, long prec);

// alpha = (-b + sqrt(disc)) / (2a), a > 0, disc < 0, 4a | b^2 - disc.
struct QuadraticNumber {
  long a = 0;
  long b = 0;
  long disc = 0;
};

// coeff * sqrt(radicand), radicand squarefree-reduced.
struct QuadraticSurd {
  mpq_class coeff;
  mpz_class radicand{1};

  CertifiedReal to_real(long prec) const;
  std::string to_string() const;
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.coeff == y.coeff && x.radicand == y.radicand;
  }
};

// Pulls square factors of the radicand into the coefficient.
QuadraticSurd make_surd(const mpq_class& coeff, const mpz_class& radicand);

struct QuadraticSeparation {
  enum class Branch { kUnequalImag, kEqualImag } branch;
  QuadraticSurd bound;
};

// Lower bound for |alpha - alpha'| between distinct imaginary quadratic
// numbers: 2 Im(a) Im(a') min(Im a, Im a') / (|D||D'|) when the imaginary
// parts differ, Im(a) / (|D| |D'|)^(1/4) otherwise.
QuadraticSeparation separate_quadratic(const QuadraticNumber& x,
                                       const QuadraticNumber& y);

// Sharper bound for numbers of the same discriminant. Exposed for reference,
// not used by any check.
QuadraticSeparation separate_quadratic_same_disc(const QuadraticNumber& x,
                                                 const QuadraticNumber& y);

}  // namespace moduli
