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

// Certified evaluation of j, j', E4, E6 and the discriminant form near the
// fundamental domain, the envelopes f(y) = j(iy) and g(y), and the explicit
// local constants at the elliptic points.
//
// Points are passed as callables producing the point at a requested
// precision, so that exact inputs (CM points, elliptic points, rationals)
// are re-materialized when the escalation ladder raises the precision.

#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "moduli/ball.hpp"

namespace moduli {

using Point = std::function<CertifiedComplex(long prec)>;
using RealPoint = std::function<CertifiedReal(long prec)>;

struct PrecisionPolicy {
  long start_bits = 128;
  long cap_bits = 8192;
};

// re + im_coeff * sqrt(radicand) * i.
Point exact_point(const mpq_class& re, const mpq_class& im_coeff,
                  const mpz_class& radicand = 1);
// The binary value of two doubles, taken exactly.
Point dyadic_point(double re, double im);
Point zeta6_point();  // (1 + sqrt(-3)) / 2
Point zeta3_point();  // (-1 + sqrt(-3)) / 2
Point i_point();

RealPoint exact_real(const mpq_class& v);
// a + b sqrt(c).
RealPoint surd_real(const mpq_class& a, const mpq_class& b, const mpz_class& c);

// ---------------------------------------------------------------------------
// Single-shot evaluation at the precision of the argument. The result is a
// valid enclosure; its width is whatever that precision affords.

struct JValues {
  CertifiedComplex j;
  CertifiedComplex jprime;
};

CertifiedComplex j_at(const CertifiedComplex& z);
CertifiedComplex jprime_at(const CertifiedComplex& z);
JValues j_and_jprime_at(const CertifiedComplex& z);
CertifiedComplex eisenstein_at(const CertifiedComplex& z, int weight);
// (E4^3 - E6^2) / 1728.
CertifiedComplex delta_eisenstein_at(const CertifiedComplex& z);
// q prod (1 - q^n)^24 with a certified product tail.
CertifiedComplex delta_product_at(const CertifiedComplex& z);

CertifiedReal envelope_f_at(const CertifiedReal& y);
CertifiedReal envelope_g_at(const CertifiedReal& y);
CertifiedReal envelope_g_prime_at(const CertifiedReal& y);
// i j'(iy) = 2 pi (e^{2 pi y} - sum n c_n e^{-2 pi n y}).
CertifiedReal ijprime_imag_axis_at(const CertifiedReal& y);

// ---------------------------------------------------------------------------
// Escalating evaluation: the working precision starts at the policy's start
// (at least prec_bits + 32) and doubles until rad <= 2^(1-prec) (1 + |mid|).
// Throws PrecisionExhausted past the cap.

CertifiedComplex eval_j(const Point& z, long prec_bits,
                        const PrecisionPolicy& policy = {});
CertifiedComplex eval_j_prime(const Point& z, long prec_bits,
                              const PrecisionPolicy& policy = {});
JValues eval_j_and_prime(const Point& z, long prec_bits,
                         const PrecisionPolicy& policy = {});
CertifiedComplex eval_eisenstein(const Point& z, int weight, long prec_bits,
                                 const PrecisionPolicy& policy = {});
CertifiedComplex eval_delta_form(const Point& z, long prec_bits,
                                 const PrecisionPolicy& policy = {});
CertifiedComplex eval_delta_product(const Point& z, long prec_bits,
                                    const PrecisionPolicy& policy = {});

CertifiedReal envelope_f(const RealPoint& y, long prec_bits,
                         const PrecisionPolicy& policy = {});
CertifiedReal envelope_g(const RealPoint& y, long prec_bits,
                         const PrecisionPolicy& policy = {});
CertifiedReal envelope_g_prime(const RealPoint& y, long prec_bits,
                               const PrecisionPolicy& policy = {});

// Bracket [lo, hi] for the unique zero y0 of g', found by bisection from
// [1.018, 1.019] until hi - lo <= 1e-6.
struct Y0Bracket {
  mpq_class lo;
  mpq_class hi;
  CertifiedReal g_prime_lo;  // < 0
  CertifiedReal g_prime_hi;  // > 0
  int steps = 0;
  CertifiedReal interval() const;
};
Y0Bracket locate_y0(long prec_bits = 128);

// ---------------------------------------------------------------------------
// Elliptic points.

struct EllipticConstants {
  CertifiedComplex A0;  // j'''(zeta6) / 3!
  CertifiedComplex A1;  // j''(i) / 2!
  CertifiedReal abs_A0() const;
  CertifiedReal abs_A1() const;
};

// Closed forms -27 Gamma(1/3)^18 / pi^9 i and -81 Gamma(1/4)^8 / pi^4.
EllipticConstants elliptic_constants_gamma(long prec_bits = 128);
// Discrete Cauchy integral of j on a small circle around the elliptic point,
// with the aliasing error bounded through the envelope f.
EllipticConstants elliptic_constants_cauchy(long prec_bits = 128);

// k-th Taylor coefficient of j at center from m samples on a circle of
// radius h; outer_radius R > h bounds the aliasing error.
CertifiedComplex taylor_coefficient_cauchy(const Point& center, int k,
                                           const mpq_class& h,
                                           const mpq_class& outer_radius,
                                           int m, long prec_bits);

enum class EllipticPoint { kZeta6, kI };

struct KappaLambda {
  CertifiedReal kappa;
  CertifiedReal lambda;
};

// Coefficients of the local remainder bounds at zeta6 (0 < R < sqrt3/2)
// and at i (0 < R < 1). Throws DomainError for R out of range.
KappaLambda kappa_lambda(EllipticPoint p, const mpq_class& R,
                         long prec_bits = 128);

// 2 pi min{|j|, |Delta|^(1/3) |j|^(1/3) |j - 1728|}.
CertifiedReal jprime_floor_kuehne(const Point& z, long prec_bits = 128);
CertifiedReal jprime_floor_kuehne_at(const CertifiedComplex& z);

// ---------------------------------------------------------------------------
// Global lower bounds on the fundamental domain.

struct GlobalFloorReport {
  bool j_ok = true;         // near/far trichotomy for |j|
  bool j1728_ok = true;     // near/far trichotomy for |j - 1728|
  bool jprime_ok = true;    // three-way trichotomy for |j'|
  bool kuehne_ok = true;    // Kuehne floor <= |j'|
  bool envelope_ok = true;  // |j| <= f(Im z), |j'| <= g(Im z)
  std::string branch;       // which regions the point may lie in
  bool passed() const {
    return j_ok && j1728_ok && jprime_ok && kuehne_ok && envelope_ok;
  }
};

// Checks every floor at one point; f_y and g_y are the envelopes at Im z
// (passed in so callers can share them across a grid row).
GlobalFloorReport check_global_floors(const CertifiedComplex& z,
                                      const CertifiedReal& f_y,
                                      const CertifiedReal& g_y);

// Cell-centred n x n grid over [-1/2, 1/2] x [sqrt3/2, 2], restricted to
// |z| >= 1. Odd n is rounded up so that cell centres never fall on
// Re z = 0, where |j(z)| = f(Im z).
struct GridPoint {
  double re;
  double im;
};
std::vector<GridPoint> fundamental_domain_grid(int n = 100);

struct GridFloorSummary {
  long points = 0;
  long failures = 0;
  long near_zeta = 0;
  long near_i = 0;
  long far = 0;
  std::vector<GridPoint> failed;
  bool passed() const { return failures == 0 && points > 0; }
};
GridFloorSummary verify_global_floors_grid(int n = 100, long prec_bits = 128,
                                           int workers = 1);

}  // namespace moduli
