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


#include <doctest.h>

#include <mpfr.h>

#include <random>

#include "moduli/ball.hpp"

using namespace moduli;

TEST_CASE("exact values are contained") {
  auto a = CertifiedReal::exact(make_q(1, 3), 128);
  CHECK(a.contains(make_q(1, 3)));
  CHECK_FALSE(a.contains(make_q(1, 3) + make_q(1, mpz_class("1000000000000000000000000000000"))));
  auto b = CertifiedReal::exact(mpz_class(7), 64);
  mpz_class k;
  CHECK(b.unique_integer(k));
  CHECK(k == 7);
}

TEST_CASE("rational arithmetic is enclosed") {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int t = 0; t < 500; ++t) {
    mpq_class p = make_q(num(rng), den(rng)), q = make_q(num(rng), den(rng));
    if (sgn(q) == 0) continue;
    auto x = CertifiedReal::exact(p, 96), y = CertifiedReal::exact(q, 96);
    CHECK((x + y).contains(mpq_class(p + q)));
    CHECK((x - y).contains(mpq_class(p - q)));
    CHECK((x * y).contains(mpq_class(p * q)));
    CHECK((x / y).contains(mpq_class(p / q)));
    CHECK(sqr(x).contains(mpq_class(p * p)));
  }
}

TEST_CASE("elementary functions enclose high-precision references") {
  const long w = 128;
  mpfr_t ref;
  mpfr_init2(ref, 1000);
  auto check_ref = [&](const CertifiedReal& v) {
    // v is a ball; compare its enclosure against a 1000-bit reference.
    mpfr_t lo, hi;
    mpfr_init2(lo, 1000);
    mpfr_init2(hi, 1000);
    v.lower(lo);
    v.upper(hi);
    bool ok = mpfr_lessequal_p(lo, ref) && mpfr_lessequal_p(ref, hi);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return ok;
  };
  mpfr_const_pi(ref, MPFR_RNDN);
  CHECK(check_ref(CertifiedReal::pi(w)));
  mpfr_set_ui(ref, 2, MPFR_RNDN);
  mpfr_sqrt(ref, ref, MPFR_RNDN);
  CHECK(check_ref(sqrt(CertifiedReal::exact(2L, w))));
  mpfr_set_ui(ref, 3, MPFR_RNDN);
  mpfr_exp(ref, ref, MPFR_RNDN);
  CHECK(check_ref(exp(CertifiedReal::exact(3L, w))));
  mpfr_set_ui(ref, 10, MPFR_RNDN);
  mpfr_log(ref, ref, MPFR_RNDN);
  CHECK(check_ref(log(CertifiedReal::exact(10L, w))));
  mpfr_set_ui(ref, 1, MPFR_RNDN);
  mpfr_sin(ref, ref, MPFR_RNDN);
  CHECK(check_ref(sin(CertifiedReal::exact(1L, w))));
  mpfr_set_ui(ref, 1, MPFR_RNDN);
  mpfr_cos(ref, ref, MPFR_RNDN);
  CHECK(check_ref(cos(CertifiedReal::exact(1L, w))));
  mpfr_set_ui(ref, 1, MPFR_RNDN);
  mpfr_div_ui(ref, ref, 3, MPFR_RNDN);
  mpfr_gamma(ref, ref, MPFR_RNDN);
  CHECK(check_ref(gamma_small(CertifiedReal::exact(make_q(1, 3), w))));
  mpfr_set_ui(ref, 7, MPFR_RNDN);
  mpfr_cbrt(ref, ref, MPFR_RNDN);
  CHECK(check_ref(cbrt(CertifiedReal::exact(7L, w))));
  mpfr_clear(ref);
}

TEST_CASE("Gamma(1/2)^2 encloses pi") {
  auto g = gamma_small(CertifiedReal::exact(make_q(1, 2), 160));
  CHECK(sqr(g).overlaps(CertifiedReal::pi(160)));
  CHECK(sqr(g).rad() < Mag::pow2(-140));
}

TEST_CASE("comparisons are certified") {
  auto a = CertifiedReal::exact(make_q(1, 3), 64);
  auto b = CertifiedReal::exact(make_q(1, 2), 64);
  CHECK(certainly_less(a, b));
  CHECK_FALSE(certainly_less(b, a));
  auto five = CertifiedReal::exact(5L, 64);
  CHECK(five.rad() == Mag());
  CHECK(certainly_less_equal(five, five));
  CHECK_FALSE(certainly_less(five, five));
  auto wide = CertifiedReal::hull(a, b);
  CHECK_FALSE(certainly_less(a, wide));
  CHECK(wide.contains(make_q(2, 5)));
  CHECK((a - a).contains_zero());
  CHECK((b - a).certainly_positive());
}

TEST_CASE("complex arithmetic") {
  const long w = 128;
  CertifiedComplex i(CertifiedReal(w), CertifiedReal::exact(1L, w));
  auto m1 = i * i;
  CHECK(m1.real().contains(mpz_class(-1)));
  CHECK(m1.imag().contains(mpz_class(0)));
  CertifiedComplex z(CertifiedReal::exact(3L, w), CertifiedReal::exact(4L, w));
  CHECK(abs(z).contains(mpz_class(5)));
  auto q = z / z;
  CHECK(q.real().contains(mpz_class(1)));
  CHECK(q.maybe_real());
  CertifiedComplex acc(CertifiedReal::exact(2L, w), CertifiedReal(w));
  mul_add_into(acc, z, mpz_class(1));  // 2 z + 1 = 7 + 8i
  CHECK(acc.real().contains(mpz_class(7)));
  CHECK(acc.imag().contains(mpz_class(8)));
}

TEST_CASE("decimal strings") {
  auto v = CertifiedReal::from_decimal("45745.0806", 128);
  CHECK(v.contains(make_q(457450806, 10000)));
  // Leading zeros are decimal, not octal.
  CHECK(CertifiedReal::from_decimal("0.333333333333", 128).contains(make_q(333333333333, 1000000000000)));
  CHECK(CertifiedReal::from_decimal("010", 64).contains(mpz_class(10)));
  CHECK(CertifiedReal::from_decimal("-0.0125", 64).contains(make_q(-1, 80)));
  CHECK(CertifiedReal::from_decimal("077/010", 64).contains(make_q(77, 10)));
  auto third = CertifiedReal::exact(make_q(1, 3), 128);
  CHECK(third.mid_string(10).rfind("0.3333333333", 0) == 0);
}
