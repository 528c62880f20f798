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

#include <cmath>

#include "moduli/forms.hpp"
#include "moduli/singular.hpp"

using namespace moduli;

namespace {

IntPolynomial poly(std::initializer_list<const char*> low_first) {
  std::vector<mpz_class> c;
  for (const char* s : low_first) c.emplace_back(s);
  return IntPolynomial(c);
}

// Product of (X - x_i) at working precision w, rounded coefficient-wise.
// Independent of the library's gate: any failure to isolate an integer
// returns nullopt.
std::optional<IntPolynomial> product_rounded(const Discriminant& d, long w) {
  auto xs = orbit_at(d, w);
  std::vector<CertifiedComplex> c{CertifiedComplex(CertifiedReal::exact(1L, w),
                                                   CertifiedReal(w))};
  for (const auto& x : xs) {
    std::vector<CertifiedComplex> next(c.size() + 1, CertifiedComplex(w));
    for (size_t k = 0; k < c.size(); ++k) {
      next[k + 1] = next[k + 1] + c[k];
      next[k] = next[k] - c[k] * x;
    }
    c = std::move(next);
  }
  std::vector<mpz_class> out(c.size());
  for (size_t k = 0; k < c.size(); ++k) {
    if (!c[k].imag().contains(mpz_class(0))) return std::nullopt;
    if (!c[k].real().unique_integer(out[k])) return std::nullopt;
  }
  return IntPolynomial(out);
}

}  // namespace

TEST_CASE("class number one singular moduli are the classical integers") {
  struct Case {
    long d;
    const char* j;
  } cases[] = {{-3, "0"},          {-4, "1728"},         {-7, "-3375"},
               {-8, "8000"},       {-11, "-32768"},      {-12, "54000"},
               {-16, "287496"},    {-19, "-884736"},     {-27, "-12288000"},
               {-28, "16581375"},  {-43, "-884736000"},  {-67, "-147197952000"},
               {-163, "-262537412640768000"}};
  for (const auto& c : cases) {
    auto H = hilbert_class_polynomial(validate_discriminant(c.d));
    CHECK_MESSAGE(H == IntPolynomial({-mpz_class(c.j), mpz_class(1)}), "D = " << c.d);
  }
}

TEST_CASE("Hilbert class polynomials of small discriminants") {
  CHECK(hilbert_class_polynomial(validate_discriminant(-15)) ==
        poly({"-121287375", "191025", "1"}));
  CHECK(hilbert_class_polynomial(validate_discriminant(-20)) ==
        poly({"-681472000", "-1264000", "1"}));
  CHECK(hilbert_class_polynomial(validate_discriminant(-23)) ==
        poly({"12771880859375", "-5151296875", "3491750", "1"}));
}

TEST_CASE("Hilbert polynomials are stable under doubled precision") {
  for (long D : {-23L, -71L, -84L, -119L, -260L, -719L, -1012L}) {
    auto d = validate_discriminant(D);
    auto H = hilbert_class_polynomial(d);
    CHECK(H.degree() == class_number(d));
    CHECK(H.is_monic());
    const long w = hilbert_start_bits(d);
    auto at_w = product_rounded(d, 2 * w);
    auto at_2w = product_rounded(d, 4 * w);
    REQUIRE(at_w.has_value());
    REQUIRE(at_2w.has_value());
    CHECK(*at_w == H);
    CHECK(*at_2w == H);
    // Every orbit member is a root.
    for (const auto& x : orbit_at(d, 2 * w)) {
      auto v = H.eval(x);
      CHECK(v.real().contains(mpz_class(0)));
      CHECK(v.imag().contains(mpz_class(0)));
    }
  }
}

TEST_CASE("orbit structure") {
  for (long D : {-23L, -56L, -84L, -231L, -420L, -1555L}) {
    auto d = validate_discriminant(D);
    auto xs = orbit(d, 128);
    REQUIRE(xs.size() == reduced_forms(d).size());
    CHECK(xs.front().dominance == Dominance::kDominant);
    CHECK(xs.front().is_real());
    const double dom = abs(xs.front().value).to_double();
    for (size_t i = 1; i < xs.size(); ++i) {
      CHECK(abs(xs[i].value).to_double() < dom);
      // (a, b, c) and (a, -b, c) give complex conjugates; ambiguous forms are real.
      if (xs[i].form.is_ambiguous()) CHECK(xs[i].is_real());
      for (size_t k = 0; k < xs.size(); ++k) {
        if (xs[k].form.a == xs[i].form.a && xs[k].form.b == -xs[i].form.b &&
            xs[k].form.b != 0) {
          CHECK(xs[k].value.real().overlaps(xs[i].value.real()));
          CHECK(xs[k].value.imag().overlaps(-xs[i].value.imag()));
        }
      }
    }
  }
}

TEST_CASE("dominant modulus is close to -e^{pi sqrt|D|} for odd D") {
  auto x = dominant_modulus(validate_discriminant(-163), 128);
  const double approx = -std::exp(M_PI * std::sqrt(163.0)) + 744.0;
  CHECK(x.value.real().to_double() == doctest::Approx(approx).epsilon(1e-13));
}

TEST_CASE("size corridor with constant 2079 at absolute accuracy") {
  for (long n = 3; n <= 1200; ++n) {
    if (n % 4 != 0 && n % 4 != 3) continue;
    auto d = validate_discriminant(-n);
    for (const auto& x : orbit(d, 64, Accuracy::kAbsolute)) {
      auto c = check_corridor(x);
      CHECK_MESSAGE(c.passed(), "D = -" << n << " form " << x.form.to_string());
      CHECK(std::log2(abs(x.value).upper_double() + 1.0) <=
            log2_magnitude_estimate(x.form) + 1e-9);
    }
  }
}

TEST_CASE("absolute accuracy meets its radius target") {
  auto d = validate_discriminant(-1555);
  for (const auto& x : orbit(d, 100, Accuracy::kAbsolute)) {
    CHECK(x.value.radius() < Mag::pow2(-98));
  }
  auto f = reduced_forms(d).front();
  auto cm = make_cm_point(f, 128);
  CHECK(cm.tau.overlaps(cm_point_fn(f)(128)));
}
