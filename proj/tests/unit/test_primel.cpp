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

#include <numeric>
#include <random>

#include "moduli/errors.hpp"
#include "moduli/primel.hpp"
#include "moduli/singular.hpp"

using namespace moduli;

namespace {

// Number of reduced primitive forms by direct count.
long count_forms(long D) {
  long h = 0;
  for (long a = 1; 3 * a * a <= -D; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      if (std::gcd(std::gcd(a, b), c) == 1) ++h;
    }
  }
  return h;
}

// Number of genera 2^(mu - 1) from the prime factorization of D.
long genus_count(long D) {
  long n = -D;
  long m = n % 4 == 0 ? n / 4 : n;
  long r = 0;
  for (long p = 3, t = m; t > 1; p += 2) {
    while (t % 2 == 0) t /= 2;
    if (t == 1) break;
    if (p * p > t) {
      ++r;
      break;
    }
    if (t % p == 0) {
      ++r;
      while (t % p == 0) t /= p;
    }
  }
  long mu = r;
  if (n % 4 == 0) {
    if (m % 4 == 1 || m % 4 == 2) mu = r + 1;
    else if (m % 8 == 4) mu = r + 1;
    else if (m % 8 == 0) mu = r + 2;
  }
  return 1L << (mu - 1);
}

const std::vector<long> kBad = {
    -39,  -47,  -55,  -56,  -63,  -68,  -79,  -84,  -87,  -103,
    -120, -127, -132, -135, -136, -168, -175, -180, -184, -196,
    -207, -228, -247, -280, -292, -312, -328, -340, -372, -388,
    -408, -520, -532, -568, -708, -760, -772, -1012};
const std::vector<long> kBold = {-84,  -120, -132, -168, -180, -228, -280, -312,
                                 -340, -372, -408, -520, -532, -708, -760, -1012};

}  // namespace

TEST_CASE("bad discriminants against an independent scan") {
  std::vector<long> oracle;
  for (long n = 3; n <= 20000; ++n) {
    const long D = -n;
    const long r8 = ((D % 8) + 8) % 8, r16 = ((D % 16) + 16) % 16;
    const bool a = r8 == 1, b = r16 == 8 || r16 == 12;
    if (!a && !b) continue;
    const long h = count_forms(D);
    if ((a && h >= 4 && h <= 6) || (b && h == 4)) oracle.push_back(D);
  }
  std::vector<long> got;
  for (const auto& d : bad_discriminants()) got.push_back(d.value);
  CHECK(got == oracle);
  CHECK(got == kBad);
}

TEST_CASE("two-elementary class groups via genus theory") {
  for (long n = 3; n <= 3000; ++n) {
    if (n % 4 != 0 && n % 4 != 3) continue;
    auto d = validate_discriminant(-n);
    CHECK_MESSAGE(is_two_elementary(d) == (class_number(d) == genus_count(-n)),
                  "D = -" << n);
  }
  std::vector<long> got;
  for (const auto& d : two_elementary_subset()) got.push_back(d.value);
  CHECK(got == kBold);
}

TEST_CASE("ratio sets of a non-bold discriminant") {
  auto d = validate_discriminant(-47);  // h = 5
  auto a = alpha_set(d, 128);
  // (i, j, k) with i in 2..5 and j < k in 2..5.
  CHECK(a.elements.size() == 4 * 6);
  auto m = min_imag(a);
  CHECK(m.value.to_double() >= 345.0);
  CHECK_THROWS_AS(alpha_set(validate_discriminant(-3), 128), DomainError);
  // For the bold -84 every ratio is real, so the floor cannot hold there.
  auto b = min_imag(alpha_set(validate_discriminant(-84), 128));
  CHECK(b.value.contains_zero());
}

TEST_CASE("conjugate polynomials for class number two") {
  // Roots of X^2 + 191025 X - 121287375: the conjugate of x is -191025 - x.
  auto fs = conjugate_polynomials(validate_discriminant(-15));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == RatPolynomial::x());
  CHECK(fs[1] == RatPolynomial({mpq_class(-191025), mpq_class(-1)}));
}

TEST_CASE("conjugate polynomials satisfy H(f) = 0 mod H and permute the orbit") {
  for (long D : {-84L, -120L, -1012L}) {
    auto d = validate_discriminant(D);
    auto H = hilbert_class_polynomial(d).to_rational();
    auto fs = conjugate_polynomials(d);
    auto xs = orbit(d, 256);
    for (const auto& f : fs) {
      CHECK(compose_mod(H, f, H).is_zero());
      CHECK(f.degree() <= 3);
      // f(x_1) is one of the conjugates.
      auto v = f.eval(xs[0].value);
      bool hit = false;
      for (const auto& x : xs) hit = hit || v.overlaps(x.value);
      CHECK(hit);
    }
    CHECK(nonproportional(fs).holds);
  }
}

TEST_CASE("cross pairs") {
  CHECK(cross_pairs().size() == 15);
  CHECK(is_cross_pair(-96, -192));
  CHECK(is_cross_pair(-192, -96));
  CHECK_FALSE(is_cross_pair(-96, -100));
  CHECK_THROWS_AS(cross_pair_polynomials(validate_discriminant(-96), validate_discriminant(-100)),
                  NotInClassifiedList);
  auto dx = validate_discriminant(-120), dy = validate_discriminant(-280);
  auto gs = cross_pair_polynomials(dx, dy);
  auto Hy = hilbert_class_polynomial(dy).to_rational();
  auto Hx = hilbert_class_polynomial(dx).to_rational();
  for (const auto& g : gs) CHECK(compose_mod(Hy, g, Hx).is_zero());
  CHECK(nonproportional(conjugate_polynomials(dx), gs).holds);
}

TEST_CASE("minors") {
  RatPolynomial u({mpq_class(1), mpq_class(2)});
  CHECK_FALSE(nonzero_minor(u, u * mpq_class(3)).has_value());
  CHECK_FALSE(nonzero_minor(u, RatPolynomial()).has_value());
  auto m = nonzero_minor(u, RatPolynomial({mpq_class(1), mpq_class(3)}));
  REQUIRE(m.has_value());
  CHECK(m->value == 1);
  // Three identical conjugates cannot all be distinct: the check fails.
  std::vector<RatPolynomial> bad = {RatPolynomial::x(), RatPolynomial::x() * mpq_class(2),
                                    RatPolynomial::x() * mpq_class(3)};
  auto np = nonproportional(bad);
  CHECK_FALSE(np.holds);
  REQUIRE(np.counterexample.has_value());
}

TEST_CASE("exceptional coefficient for (-15, -20)") {
  // Independent derivation: alpha^2 is the ratio of the discriminants of
  // the two Hilbert class polynomials.
  mpz_class ex = mpz_class(191025) * 191025 + 4 * mpz_class(121287375);
  mpz_class ey = mpz_class(1264000) * 1264000 + 4 * mpz_class(681472000);
  mpq_class ratio = make_q(ex, ey);
  auto dx = validate_discriminant(-15), dy = validate_discriminant(-20);
  auto a0 = example_quad_alpha(dx, dy);
  REQUIRE(a0.has_value());
  CHECK(*a0 * *a0 == ratio);
  CHECK(*a0 < 0);
  CHECK(*a0 == make_q(-1323, 8704));
  using Tag = PrimitiveVerdict::Tag;
  CHECK(classify_primitive(dx, dy, *a0).tag == Tag::kExceptionExampleQuad);
  CHECK(classify_primitive(dx, dy, -*a0).tag == Tag::kExceptionExampleQuad);
  CHECK(exception_collides(dx, dy, *a0, 256));
  CHECK(exception_collides(dx, dy, -*a0, 256));
  CHECK(classify_primitive(dx, dy, make_q(3, 2)).tag == Tag::kGenerates);
  CHECK_FALSE(exception_collides(dx, dy, make_q(3, 2), 256));
  // Different quadratic fields: no exceptional coefficient.
  CHECK_FALSE(example_quad_alpha(dx, validate_discriminant(-24)).has_value());
  CHECK(example_quad_alpha(dx, dx) == mpq_class(1));
}

TEST_CASE("classification cases") {
  using Tag = PrimitiveVerdict::Tag;
  auto d15 = validate_discriminant(-15);
  CHECK_THROWS_AS(classify_primitive(d15, d15, 0), InvalidAlpha);
  auto v = classify_primitive(d15, d15, 1);
  CHECK(v.tag == Tag::kSumDiffCase);
  CHECK(v.subfield_index == 2);
  v = classify_primitive(d15, d15, -1);
  CHECK(v.tag == Tag::kSumDiffCase);
  CHECK(v.subfield_index == 1);
  CHECK(classify_primitive(validate_discriminant(-4), validate_discriminant(-4), 5).tag ==
        Tag::kTrivialEqual);
  CHECK(classify_primitive(d15, validate_discriminant(-23), 1).tag == Tag::kGenerates);
  CHECK(classify_primitive(d15, d15, 2).tag == Tag::kGenerates);
  CHECK(certify_generates(d15, validate_discriminant(-23), make_q(-7, 3), 128));
  CHECK(certify_generates(d15, d15, mpq_class(2), 128));
}

TEST_CASE("report checks") {
  auto r = verify_bad_list(2000);
  CHECK(r.passed);
  CHECK(r.witness["count"] == 38);
  CHECK(r.witness["two_elementary_count"] == 16);
  CHECK_FALSE(verify_bad_list(1000).passed);  // -1012 lies beyond the horizon
  CHECK_THROWS_AS(verify_cross_pairs(1, {{-96, -100}}), NotInClassifiedList);
  auto c = verify_cross_pairs(1, {{-96, -192}});
  CHECK(c.passed);
  CHECK(c.items.size() == 1);
}
