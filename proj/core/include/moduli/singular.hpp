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

// Singular moduli as certified numbers, their Galois orbits and Hilbert class
// polynomials.

#pragma once

#include <vector>

#include "moduli/ball.hpp"
#include "moduli/forms.hpp"
#include "moduli/modular.hpp"
#include "moduli/polynomial.hpp"

namespace moduli {

struct CMPoint {
  ReducedForm form;
  CertifiedComplex tau;
};

CMPoint make_cm_point(const ReducedForm& f, long prec);
// The CM point as an exact point, re-materialized at any precision.
Point cm_point_fn(const ReducedForm& f);

// Upper estimate of log2 |j(tau)| for the form, from |j| <= e^{2 pi Im tau}
// + 2079 (generous; used only to plan precision).
double log2_magnitude_estimate(const ReducedForm& f);

enum class Accuracy {
  kRelative,  // rad <= 2^(1-prec) (1 + |x|)
  kAbsolute,  // rad <= 2^(1-prec), up to the rounding of the estimate
};

struct SingularModulus {
  ReducedForm form;
  CertifiedComplex value;
  Dominance dominance = Dominance::kGeneric;

  // Certified real: the imaginary enclosure contains zero.
  bool is_real() const { return value.maybe_real(); }
};

SingularModulus singular_modulus(const ReducedForm& f, long prec_bits,
                                 Accuracy acc = Accuracy::kRelative,
                                 const PrecisionPolicy& policy = {});

// One entry per reduced form, in the order of reduced_forms.
std::vector<SingularModulus> orbit(const Discriminant& d, long prec_bits,
                                   Accuracy acc = Accuracy::kRelative,
                                   const PrecisionPolicy& policy = {});

// The unique member with a = 1.
SingularModulus dominant_modulus(const Discriminant& d, long prec_bits,
                                 const PrecisionPolicy& policy = {});

// Size corridor around e^{pi sqrt|D|} with constant 2079: every modulus is at
// most e^{pi sqrt|D|} + 2079, a dominant one at least e^{pi sqrt|D|} - 2079,
// a non-dominant one at most e^{pi sqrt|D| / 2} + 2079 and a generic one at
// most e^{pi sqrt|D| / 3} + 2079.
struct CorridorCheck {
  bool upper_ok = true;
  bool lower_ok = true;
  bool passed() const { return upper_ok && lower_ok; }
};
CorridorCheck check_corridor(const SingularModulus& x);

// Monic integer polynomial whose roots are the orbit. Each coefficient is
// accepted only when its certified enclosure is narrower than 1/2 and holds
// exactly one integer; otherwise the precision is doubled up to the cap,
// which is raised as needed to at least twice the starting precision.
IntPolynomial hilbert_class_polynomial(const Discriminant& d,
                                       const PrecisionPolicy& policy = {});

// Orbit values at working precision w as a single shot (no escalation).
std::vector<CertifiedComplex> orbit_at(const Discriminant& d, long w);

// Starting working precision for the Hilbert class polynomial.
long hilbert_start_bits(const Discriminant& d);

}  // namespace moduli
