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

#include <complex>
#include <limits>
#include <random>

#include "moduli/separation.hpp"

using namespace moduli;

namespace {

std::complex<double> to_c(const CertifiedComplex& z) {
  return {z.real().to_double(), z.imag().to_double()};
}

// Double-precision brute force; only trusted to ~1e-12 relative, far below
// the gaps it is compared against.
double brute_min(const std::vector<ModulusPoint>& pts, bool equal_only) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t k = i + 1; k < pts.size(); ++k) {
      if (equal_only && pts[i].form.disc.value != pts[k].form.disc.value) continue;
      best = std::min(best, std::abs(to_c(pts[i].value) - to_c(pts[k].value)));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("separation bound branches") {
  auto d = [](long v) { return validate_discriminant(v); };
  auto s = separation_bound(d(-3), d(-4));
  CHECK(s.value == make_q(800, 81));
  CHECK(s.branch == 1);
  CHECK(s.dx == 4);
  CHECK(s.dy == 3);
  s = separation_bound(d(-400), d(-3));
  CHECK(s.value == make_q(700, 64000000));
  CHECK(s.branch == 3);
  s = separation_bound(d(-20), d(-19));
  // 800/19^4 = 0.00614, 20000/(20 19^3) = 0.1458, 700/8000 = 0.0875.
  CHECK(s.value == make_q(800, 130321));
  CHECK(s.branch == 1);
  CHECK(weak_bound(d(-20), d(-3)) == make_q(800, 160000));
  // Symmetric in its arguments.
  CHECK(separation_bound(d(-7), d(-300)).value == separation_bound(d(-300), d(-7)).value);
}

TEST_CASE("discriminants are enumerated completely") {
  auto ds = discriminants_up_to(1000);
  long expected = 0;
  for (long n = 3; n <= 1000; ++n) expected += (n % 4 == 0 || n % 4 == 3);
  CHECK(static_cast<long>(ds.size()) == expected);
  for (size_t i = 1; i < ds.size(); ++i) CHECK(ds[i - 1].abs() < ds[i].abs());
}

TEST_CASE("bucketed and brute-force closest pairs agree for X <= 100") {
  for (long X : {10L, 40L, 75L, 100L}) {
    auto pts = singular_moduli_up_to(X, 128, 1);
    auto g = closest_pair_bucketed(pts);
    auto b = closest_pair_brute(pts, PairMode::kAll);
    CHECK(g.x == b.x);
    CHECK(g.y == b.y);
    CHECK(g.distance.overlaps(b.distance));
    const double ref = brute_min(pts, false);
    CHECK(g.lower <= ref * (1 + 1e-12));
    CHECK(ref <= g.upper * (1 + 1e-12));
    if (X < 15) continue;  // class number one throughout: no equal pairs
    auto e = closest_pair_brute(pts, PairMode::kEqualDiscriminant);
    CHECK(pts[e.x].form.disc.value == pts[e.y].form.disc.value);
    CHECK(e.distance.to_double() == doctest::Approx(brute_min(pts, true)).epsilon(1e-12));
  }
}

TEST_CASE("bucketed search on clustered synthetic points") {
  auto base = singular_moduli_up_to(400, 64, 1);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    std::vector<ModulusPoint> pts;
    const double scale = std::pow(10.0, (t % 7) - 3);
    for (size_t i = 0; i < 300; ++i) {
      const long w = 64;
      CertifiedComplex z(CertifiedReal::from_double(scale * u(rng), w),
                         CertifiedReal::from_double(scale * u(rng), w));
      pts.push_back({base[i].form, z});
    }
    auto g = closest_pair_bucketed(pts);
    auto b = closest_pair_brute(pts, PairMode::kAll);
    CHECK(g.x == b.x);
    CHECK(g.y == b.y);
    CHECK(g.distance.to_double() == doctest::Approx(brute_min(pts, false)).epsilon(1e-12));
  }
}

TEST_CASE("witness order") {
  auto f = [](long D, long a, long b) {
    for (const auto& r : reduced_forms(validate_discriminant(D))) {
      if (r.a == a && r.b == b) return r;
    }
    FAIL("form not found");
    return ReducedForm{};
  };
  auto x = f(-15, 1, 1), y = f(-15, 2, 1), z = f(-20, 1, 0);
  CHECK(witness_less(x, y, x, z));
  CHECK_FALSE(witness_less(x, z, x, y));
  CHECK(witness_less(x, z, y, z));
}

TEST_CASE("table rows are the tabulated exact values") {
  const auto& t = table1();
  CHECK(t[0].X == 300);
  CHECK(t[0].d == make_q(382, 100));
  CHECK(t[0].d_prime == make_q(924, 10));
  CHECK(t[1].d == make_q(305, 1000));
  CHECK(t[1].d_prime == make_q(157, 10));
  CHECK(t[2].d == make_q(292, 10000));
  CHECK(t[2].d_prime == make_q(307, 100));
  CHECK(t[3].d == make_q(247, 100000));
  CHECK(t[3].d_prime == make_q(494, 1000));
  for (int k = 0; k < 4; ++k) CHECK(t[k].k == k + 1);
}

TEST_CASE("first row, separation sweep and control") {
  auto r = verify_table1_row(table1()[0], 128, 1);
  CHECK(r.passed);
  CHECK(r.warnings.empty());
  auto s = verify_separation_theorem(150, 128, 1);
  CHECK(s.passed);
  CHECK(s.witness["strong_failures"] == 0);
  auto c = verify_separation_theorem(30, 128, 1, mpq_class(1000000));
  CHECK_FALSE(c.passed);
  CHECK(c.witness.contains("first_failure"));
  CHECK(c.witness["strong_failures"].get<long>() > 0);
}

TEST_CASE("bounds at CM points for |D| <= 400") {
  auto r = verify_cderiv(400, 128, 1);
  CHECK(r.passed);
  CHECK(r.check_id == "separation.cderiv");
  auto m = min_pairwise_distance(100, PairMode::kAll, 128, 1);
  CHECK(std::stod(m.margin.mid) == doctest::Approx(40.2064615171).epsilon(1e-10));
  CHECK(m.witness["x"]["form"] == "(4,4,5)");
  CHECK(m.witness["y"]["form"] == "(5,5,6)");
  auto e = min_pairwise_distance(100, PairMode::kEqualDiscriminant, 128, 1);
  CHECK(std::stod(e.margin.mid) == doctest::Approx(760.120345076).epsilon(1e-10));
}
