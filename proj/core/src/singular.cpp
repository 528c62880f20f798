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


#include "moduli/singular.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "moduli/errors.hpp"

namespace moduli {

namespace {

constexpr double kCorridorSlack = 2079.0;

bool coefficients_gate(const std::vector<CertifiedComplex>& coeffs,
                       std::vector<mpz_class>& out) {
  out.assign(coeffs.size(), mpz_class(0));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].imag().contains(mpz_class(0))) return false;
    if (!coeffs[i].real().unique_integer(out[i])) return false;
    if (!(coeffs[i].imag().rad() < Mag::pow2(-1))) return false;
  }
  return true;
}

}  // namespace

CMPoint make_cm_point(const ReducedForm& f, long prec) {
  return {f, cm_point(f, prec)};
}

Point cm_point_fn(const ReducedForm& f) {
  return exact_point(make_q(f.b, 2 * f.a), make_q(1, 2 * f.a),
                     mpz_class(f.disc.abs()));
}

double log2_magnitude_estimate(const ReducedForm& f) {
  double y = std::sqrt(static_cast<double>(f.disc.abs())) / (2.0 * f.a);
  double l = 2.0 * std::numbers::pi * y / std::log(2.0);
  return std::max(l, std::log2(kCorridorSlack + 1728.0)) + 1.0;
}

SingularModulus singular_modulus(const ReducedForm& f, long prec_bits,
                                 Accuracy acc, const PrecisionPolicy& policy) {
  long target = prec_bits;
  PrecisionPolicy p = policy;
  if (acc == Accuracy::kAbsolute) {
    long boost = static_cast<long>(std::ceil(log2_magnitude_estimate(f)));
    target += boost;
    p.cap_bits = std::max(p.cap_bits, 2 * (target + 32));
  }
  return {f, eval_j(cm_point_fn(f), target, p), f.dominance()};
}

std::vector<SingularModulus> orbit(const Discriminant& d, long prec_bits,
                                   Accuracy acc, const PrecisionPolicy& policy) {
  std::vector<SingularModulus> out;
  for (const auto& f : reduced_forms(d)) {
    out.push_back(singular_modulus(f, prec_bits, acc, policy));
  }
  return out;
}

SingularModulus dominant_modulus(const Discriminant& d, long prec_bits,
                                 const PrecisionPolicy& policy) {
  auto forms = reduced_forms(d);
  return singular_modulus(forms.front(), prec_bits, Accuracy::kRelative,
                          policy);
}

CorridorCheck check_corridor(const SingularModulus& x) {
  const long w = std::max(x.value.prec(), 128L);
  CertifiedReal mag = abs(x.value);
  CertifiedReal root = sqrt(CertifiedReal::exact(x.form.disc.abs(), w));
  CertifiedReal e = CertifiedReal::pi(w) * root;
  CertifiedReal slack = CertifiedReal::exact(2079L, w);
  CorridorCheck c;
  c.upper_ok = certainly_less_equal(mag, exp(e) + slack);
  switch (x.dominance) {
    case Dominance::kDominant:
      c.lower_ok = certainly_less_equal(exp(e) - slack, mag);
      break;
    case Dominance::kSubdominant:
      c.upper_ok = c.upper_ok && certainly_less_equal(mag, exp(e / 2) + slack);
      break;
    case Dominance::kGeneric:
      c.upper_ok = c.upper_ok && certainly_less_equal(mag, exp(e / 2) + slack) &&
                   certainly_less_equal(mag, exp(e / 3) + slack);
      break;
  }
  return c;
}

std::vector<CertifiedComplex> orbit_at(const Discriminant& d, long w) {
  std::vector<CertifiedComplex> out;
  for (const auto& f : reduced_forms(d)) out.push_back(j_at(cm_point(f, w)));
  return out;
}

long hilbert_start_bits(const Discriminant& d) {
  double bits = 64.0;
  for (const auto& f : reduced_forms(d)) bits += log2_magnitude_estimate(f);
  return static_cast<long>(std::ceil(bits));
}

IntPolynomial hilbert_class_polynomial(const Discriminant& d,
                                       const PrecisionPolicy& policy) {
  const long start = std::max(policy.start_bits, hilbert_start_bits(d));
  const long cap = std::max(policy.cap_bits, 2 * start);
  for (long w = start;; w = std::min(2 * w, cap)) {
    std::vector<CertifiedComplex> roots = orbit_at(d, w);
    // prod (X - x_i), coefficients low degree first.
    std::vector<CertifiedComplex> c(1, CertifiedComplex(
                                           CertifiedReal::exact(1L, w),
                                           CertifiedReal(w)));
    for (const auto& r : roots) {
      std::vector<CertifiedComplex> next(c.size() + 1, CertifiedComplex(w));
      for (size_t k = 0; k < c.size(); ++k) {
        next[k + 1] = next[k + 1] + c[k];
        next[k] = next[k] - c[k] * r;
      }
      c = std::move(next);
    }
    std::vector<mpz_class> ints;
    if (coefficients_gate(c, ints)) return IntPolynomial(std::move(ints));
    if (w >= cap) {
      throw PrecisionExhausted(
          "hilbert_class_polynomial(" + std::to_string(d.value) + ")", cap);
    }
  }
}

}  // namespace moduli
