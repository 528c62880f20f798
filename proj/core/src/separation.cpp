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


#include "moduli/separation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>

#include "moduli/errors.hpp"
#include "moduli/parallel.hpp"
#include "moduli/singular.hpp"

namespace moduli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kShuffleSeed = 0x6d6f64756c69ULL;

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count());
}

std::string form_string(const ReducedForm& f) {
  return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," +
         std::to_string(f.c) + ")";
}

Json form_json(const ReducedForm& f) {
  return Json{{"disc", f.disc.value}, {"form", form_string(f)}};
}

Json complex_json(const CertifiedComplex& z) {
  return Json{{"re", to_json(to_decimal(z.real()))},
              {"im", to_json(to_decimal(z.imag()))}};
}

// ---------------------------------------------------------------------------
// Power-of-two grid keyed by floor(mid / 2^k), computed exactly.

struct CellKey {
  mpz_class re;
  mpz_class im;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellHash {
  size_t operator()(const CellKey& k) const {
    size_t a = mpz_get_ui(k.re.get_mpz_t()) ^ (sgn(k.re) < 0 ? 0x9e37u : 0u);
    size_t b = mpz_get_ui(k.im.get_mpz_t()) ^ (sgn(k.im) < 0 ? 0x7f4au : 0u);
    return a * 0x9e3779b97f4a7c15ULL ^ (b + 0x632be59bd9b4e019ULL + (a << 6));
  }
};

mpz_class floor_scaled(mpfr_srcptr x, long k) {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(x));
  mpfr_div_2si(t, x, k, MPFR_RNDN);  // exact
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDD);
  mpfr_clear(t);
  return z;
}

CellKey cell_of(const CertifiedComplex& z, long k) {
  return {floor_scaled(z.real().mid(), k), floor_scaled(z.imag().mid(), k)};
}

// Smallest k with 2^k >= 2 (r + 2 rad): pairs within distance r then have
// midpoints in adjacent cells.
long cell_exponent(double r, double rad) {
  double v = 2.0 * (r + 2.0 * rad);
  v = std::nextafter(v, kInf);
  long k = static_cast<long>(std::ceil(std::log2(v)));
  while (std::ldexp(1.0, static_cast<int>(k)) < v) ++k;
  return k;
}

double max_radius(const std::vector<ModulusPoint>& pts) {
  double r = 0.0;
  for (const auto& p : pts) r = std::max(r, p.value.radius().to_double());
  return r;
}

class Grid {
 public:
  explicit Grid(long k) : k_(k) {}
  long exponent() const { return k_; }
  void insert(const CellKey& key, long idx) { cells_[key].push_back(idx); }
  template <class F>
  void for_neighbours(const CellKey& key, F f) const {
    for (int dr = -1; dr <= 1; ++dr) {
      for (int di = -1; di <= 1; ++di) {
        CellKey n{key.re + dr, key.im + di};
        auto it = cells_.find(n);
        if (it == cells_.end()) continue;
        for (long q : it->second) f(q);
      }
    }
  }

 private:
  long k_;
  std::unordered_map<CellKey, std::vector<long>, CellHash> cells_;
};

struct Candidate {
  long x;
  long y;
  double lo;
  double hi;
};

void order_pair(const std::vector<ModulusPoint>& pts, long& x, long& y) {
  const auto& fx = pts[x].form;
  const auto& fy = pts[y].form;
  auto key = [](const ReducedForm& f) {
    return std::make_tuple(f.disc.abs(), f.a, f.b);
  };
  if (key(fy) < key(fx)) std::swap(x, y);
}

ClosestPair finish(const std::vector<ModulusPoint>& pts,
                   std::vector<Candidate>& cands, double best_up,
                   long compared) {
  ClosestPair out;
  out.compared = compared;
  out.upper = best_up;
  out.lower = kInf;
  const Candidate* w = nullptr;
  for (auto& c : cands) {
    if (c.lo > best_up) continue;
    order_pair(pts, c.x, c.y);
    out.lower = std::min(out.lower, c.lo);
    if (w == nullptr ||
        witness_less(pts[c.x].form, pts[c.y].form, pts[w->x].form,
                     pts[w->y].form)) {
      w = &c;
    }
  }
  if (w == nullptr) throw DegenerateInput("closest pair: no candidates");
  out.x = w->x;
  out.y = w->y;
  out.distance = abs(pts[w->x].value - pts[w->y].value);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bounds

SeparationBound separation_bound(const Discriminant& a, const Discriminant& b) {
  SeparationBound s;
  s.dx = std::max(a.abs(), b.abs());
  s.dy = std::min(a.abs(), b.abs());
  mpz_class X = s.dx, Y = s.dy;
  mpq_class t1 = make_q(800, Y * Y * Y * Y);
  mpq_class t2 = make_q(20000, X * Y * Y * Y);
  mpq_class t3 = make_q(700, X * X * X);
  s.value = t1;
  s.branch = 1;
  if (t2 < s.value) {
    s.value = t2;
    s.branch = 2;
  }
  if (t3 < s.value) {
    s.value = t3;
    s.branch = 3;
  }
  return s;
}

mpq_class weak_bound(const Discriminant& a, const Discriminant& b) {
  mpz_class m = std::max(a.abs(), b.abs());
  return make_q(800, m * m * m * m);
}

std::vector<Discriminant> discriminants_up_to(long X) {
  std::vector<Discriminant> out;
  for (long n = 3; n <= X; ++n) {
    if (n % 4 == 0 || n % 4 == 3) out.push_back(validate_discriminant(-n));
  }
  return out;
}

std::vector<ModulusPoint> singular_moduli_up_to(long X, long prec_bits,
                                                int workers,
                                                const PrecisionPolicy& policy) {
  std::vector<ReducedForm> forms;
  for (const auto& d : discriminants_up_to(X)) {
    for (const auto& f : reduced_forms(d)) forms.push_back(f);
  }
  std::vector<ModulusPoint> pts(forms.size());
  parallel_for(forms.size(), workers, [&](size_t i) {
    pts[i] = {forms[i],
              singular_modulus(forms[i], prec_bits, Accuracy::kAbsolute, policy)
                  .value};
  });
  return pts;
}

const char* to_string(PairMode m) {
  return m == PairMode::kAll ? "all" : "equal";
}

bool witness_less(const ReducedForm& x1, const ReducedForm& y1,
                  const ReducedForm& x2, const ReducedForm& y2) {
  auto key = [](const ReducedForm& x, const ReducedForm& y) {
    return std::make_tuple(x.disc.abs(), x.a, x.b, y.disc.abs(), y.a, y.b);
  };
  return key(x1, y1) < key(x2, y2);
}

// ---------------------------------------------------------------------------
// Closest pair

ClosestPair closest_pair_bucketed(const std::vector<ModulusPoint>& pts) {
  const long n = static_cast<long>(pts.size());
  if (n < 2) throw DegenerateInput("closest pair needs at least two points");
  std::vector<long> order(n);
  std::iota(order.begin(), order.end(), 0L);
  std::mt19937_64 rng(kShuffleSeed);
  std::shuffle(order.begin(), order.end(), rng);

  const double rad = max_radius(pts);
  double best_up = abs(pts[order[0]].value - pts[order[1]].value).upper_double();
  long compared = 1;
  std::vector<Candidate> cands;
  std::vector<CellKey> keys(n);

  auto build = [&](long k, long upto) {
    Grid g(k);
    for (long i = 0; i < upto; ++i) {
      keys[order[i]] = cell_of(pts[order[i]].value, k);
      g.insert(keys[order[i]], order[i]);
    }
    return g;
  };
  Grid grid = build(cell_exponent(best_up, rad), 1);

  for (long i = 1; i < n; ++i) {
    const long p = order[i];
    keys[p] = cell_of(pts[p].value, grid.exponent());
    grid.for_neighbours(keys[p], [&](long q) {
      CertifiedReal d = abs(pts[p].value - pts[q].value);
      ++compared;
      double lo = d.lower_double();
      double hi = d.upper_double();
      if (lo <= best_up) cands.push_back({p, q, lo, hi});
      if (hi < best_up) best_up = hi;
    });
    grid.insert(keys[p], p);
    long k = cell_exponent(best_up, rad);
    if (k < grid.exponent()) {
      grid = build(k, i + 1);
      std::erase_if(cands, [&](const Candidate& c) { return c.lo > best_up; });
    }
  }
  return finish(pts, cands, best_up, compared);
}

ClosestPair closest_pair_brute(const std::vector<ModulusPoint>& pts,
                               PairMode mode) {
  const long n = static_cast<long>(pts.size());
  double best_up = kInf;
  long compared = 0;
  std::vector<Candidate> cands;
  for (long i = 0; i < n; ++i) {
    for (long k = i + 1; k < n; ++k) {
      if (mode == PairMode::kEqualDiscriminant &&
          pts[i].form.disc.value != pts[k].form.disc.value) {
        continue;
      }
      CertifiedReal d = abs(pts[i].value - pts[k].value);
      ++compared;
      double lo = d.lower_double();
      double hi = d.upper_double();
      if (lo <= best_up) cands.push_back({i, k, lo, hi});
      if (hi < best_up) {
        best_up = hi;
        std::erase_if(cands, [&](const Candidate& c) { return c.lo > best_up; });
      }
    }
  }
  if (compared == 0) throw DegenerateInput("closest pair: no admissible pairs");
  return finish(pts, cands, best_up, compared);
}

namespace {

ClosestPair closest_pair_equal(const std::vector<ModulusPoint>& pts,
                               int workers) {
  // Points are grouped by discriminant; search each group independently.
  std::vector<std::pair<long, long>> groups;
  for (long i = 0; i < static_cast<long>(pts.size());) {
    long j = i;
    while (j < static_cast<long>(pts.size()) &&
           pts[j].form.disc.value == pts[i].form.disc.value) {
      ++j;
    }
    if (j - i >= 2) groups.push_back({i, j});
    i = j;
  }
  if (groups.empty()) throw DegenerateInput("no discriminant with h >= 2");
  std::vector<ClosestPair> part(groups.size());
  parallel_for(groups.size(), workers, [&](size_t g) {
    std::vector<ModulusPoint> sub(pts.begin() + groups[g].first,
                                  pts.begin() + groups[g].second);
    part[g] = closest_pair_brute(sub);
    part[g].x += groups[g].first;
    part[g].y += groups[g].first;
  });
  ClosestPair best = part[0];
  double lower = kInf;
  long compared = 0;
  for (const auto& c : part) {
    lower = std::min(lower, c.lower);
    compared += c.compared;
    if (c.upper < best.upper) best = c;
  }
  // Witness: smallest key among groups whose minimum may tie the best.
  for (const auto& c : part) {
    if (c.lower <= best.upper &&
        witness_less(pts[c.x].form, pts[c.y].form, pts[best.x].form,
                     pts[best.y].form)) {
      double u = best.upper;
      best = c;
      best.upper = std::min(u, c.upper);
    }
  }
  best.lower = lower;
  best.compared = compared;
  return best;
}

ClosestPair closest_pair(const std::vector<ModulusPoint>& pts, PairMode mode,
                         long X, int workers) {
  if (mode == PairMode::kEqualDiscriminant) {
    return closest_pair_equal(pts, workers);
  }
  return X <= 100 ? closest_pair_brute(pts) : closest_pair_bucketed(pts);
}

Json closest_pair_witness(const std::vector<ModulusPoint>& pts,
                          const ClosestPair& c) {
  return Json{{"x", form_json(pts[c.x].form)},
              {"x_value", complex_json(pts[c.x].value)},
              {"y", form_json(pts[c.y].form)},
              {"y_value", complex_json(pts[c.y].value)},
              {"distance", to_json(to_decimal(c.distance))}};
}

}  // namespace

CheckReport min_pairwise_distance(long X, PairMode mode, long prec_bits,
                                  int workers, const PrecisionPolicy& policy) {
  if (X < 3) throw DomainError("min_pairwise_distance: X must be >= 3");
  auto t0 = std::chrono::steady_clock::now();
  auto pts = singular_moduli_up_to(X, prec_bits, workers, policy);
  ClosestPair c = closest_pair(pts, mode, X, workers);
  CheckReport r;
  r.check_id = "separation.min_distance";
  r.params = Json{{"X", X}, {"mode", to_string(mode)}, {"points", pts.size()}};
  r.passed = c.lower > 0.0;
  r.margin = to_decimal(c.distance);
  r.witness = closest_pair_witness(pts, c);
  r.witness["certified_lower"] = to_decimal(mpq_class(c.lower), 12).mid;
  r.prec_bits = prec_bits;
  r.wall_ms = elapsed_ms(t0);
  return r;
}

// ---------------------------------------------------------------------------
// Small-discriminant minima

const std::array<Table1Entry, 4>& table1() {
  static const std::array<Table1Entry, 4> t = {{
      {1, 300, make_q(382, 100), make_q(924, 10)},
      {2, 1000, make_q(305, 1000), make_q(157, 10)},
      {3, 3000, make_q(292, 10000), make_q(307, 100)},
      {4, 10000, make_q(247, 100000), make_q(494, 1000)},
  }};
  return t;
}

CheckReport verify_table1_row(const Table1Entry& e, long prec_bits,
                              int workers, const PrecisionPolicy& policy) {
  auto t0 = std::chrono::steady_clock::now();
  auto pts = singular_moduli_up_to(e.X, prec_bits, workers, policy);
  ClosestPair all = closest_pair(pts, PairMode::kAll, e.X, workers);
  ClosestPair eq = closest_pair(pts, PairMode::kEqualDiscriminant, e.X, workers);

  const mpq_class lo_all(all.lower), lo_eq(eq.lower);
  CheckReport r;
  r.check_id = "separation.minima_k" + std::to_string(e.k);
  r.params = Json{{"k", e.k}, {"X", e.X}, {"points", pts.size()}};
  r.passed = lo_all >= e.d && lo_eq >= e.d_prime;
  mpq_class ratio = std::min(lo_all / e.d, lo_eq / e.d_prime);
  r.margin = to_decimal(ratio, 12);
  r.witness = Json{{"all", closest_pair_witness(pts, all)},
                   {"equal", closest_pair_witness(pts, eq)}};
  r.prec_bits = prec_bits;
  r.wall_ms = elapsed_ms(t0);
  auto item = [&](const char* mode, const ClosestPair& c, const mpq_class& d,
                  const mpq_class& lo) {
    Json j{{"k", e.k},
           {"X", e.X},
           {"mode", mode},
           {"reference_bound", to_decimal(d, 6).mid},
           {"computed_min", c.distance.mid_string(12)},
           {"computed_rad", c.distance.rad_string()},
           {"slack", to_decimal(lo / d, 6).mid},
           {"passed", lo >= d}};
    r.items.push_back(j);
    if (mpq_class(c.upper) > d * make_q(105, 100)) {
      r.warnings.push_back(std::string(mode) + " minimum " +
                           c.distance.mid_string(6) +
                           " exceeds 1.05 times the tabulated bound " +
                           to_decimal(d, 6).mid);
    }
  };
  item("all", all, e.d, lo_all);
  item("equal", eq, e.d_prime, lo_eq);
  return r;
}

// ---------------------------------------------------------------------------
// Separation bound sweep

namespace {

struct PairOutcome {
  bool have = false;
  long x = -1, y = -1;
  CertifiedReal ratio;  // distance / (scale * bound)
  long pairs = 0;
  long strong_failures = 0;
  long weak_failures = 0;
  long first_fail_x = -1, first_fail_y = -1;
};

enum class Decision { kHolds, kFails, kUndecided };

Decision decide_at_least(const CertifiedReal& v, const CertifiedReal& bound) {
  if (certainly_less_equal(bound, v)) return Decision::kHolds;
  if (certainly_less(v, bound)) return Decision::kFails;
  return Decision::kUndecided;
}

}  // namespace

CheckReport verify_separation_theorem(long X, long prec_bits, int workers,
                                      const mpq_class& scale,
                                      const PrecisionPolicy& policy) {
  if (X < 3) throw DomainError("verify_separation_theorem: X must be >= 3");
  auto t0 = std::chrono::steady_clock::now();
  auto pts = singular_moduli_up_to(X, prec_bits, workers, policy);
  const long n = static_cast<long>(pts.size());

  // No pair bound exceeds that of (-4, -3); pairs farther apart than twice
  // the scaled maximum have ratio > 2 and cannot fail.
  const mpq_class bmax =
      separation_bound(validate_discriminant(-4), validate_discriminant(-3))
          .value;
  const double radius = 2.0 * mpq_class(scale * bmax).get_d() * (1.0 + 1e-9);
  const long k = cell_exponent(radius, max_radius(pts));
  Grid grid(k);
  std::vector<CellKey> keys(n);
  for (long i = 0; i < n; ++i) {
    keys[i] = cell_of(pts[i].value, k);
    grid.insert(keys[i], i);
  }

  std::vector<PairOutcome> out(n);
  parallel_for(n, workers, [&](size_t ui) {
    const long i = static_cast<long>(ui);
    PairOutcome& o = out[i];
    grid.for_neighbours(keys[i], [&](long q) {
      if (q <= i) return;
      ++o.pairs;
      const SeparationBound sb = separation_bound(pts[i].form.disc,
                                                  pts[q].form.disc);
      const mpq_class strong = scale * sb.value;
      const mpq_class weak =
          scale * weak_bound(pts[i].form.disc, pts[q].form.disc);
      CertifiedComplex xi = pts[i].value, xq = pts[q].value;
      long p = prec_bits;
      for (;;) {
        const long w = std::max(xi.prec(), xq.prec());
        CertifiedReal d = abs(xi - xq);
        Decision ds = decide_at_least(d, CertifiedReal::exact(strong, w));
        Decision dw = decide_at_least(d, CertifiedReal::exact(weak, w));
        if (ds != Decision::kUndecided && dw != Decision::kUndecided) {
          if (ds == Decision::kFails) ++o.strong_failures;
          if (dw == Decision::kFails) ++o.weak_failures;
          if ((ds == Decision::kFails || dw == Decision::kFails) &&
              o.first_fail_x < 0) {
            o.first_fail_x = i;
            o.first_fail_y = q;
          }
          CertifiedReal ratio = d / CertifiedReal::exact(strong, w);
          long a = i, b = q;
          order_pair(pts, a, b);
          bool better =
              !o.have || certainly_less(ratio, o.ratio) ||
              (!certainly_less(o.ratio, ratio) &&
               witness_less(pts[a].form, pts[b].form, pts[o.x].form,
                            pts[o.y].form));
          if (better) {
            o.have = true;
            o.ratio = ratio;
            o.x = a;
            o.y = b;
          }
          break;
        }
        p *= 2;
        if (p > policy.cap_bits) {
          throw PrecisionExhausted("separation comparison", policy.cap_bits);
        }
        xi = singular_modulus(pts[i].form, p, Accuracy::kAbsolute).value;
        xq = singular_modulus(pts[q].form, p, Accuracy::kAbsolute).value;
      }
    });
  });

  PairOutcome total;
  for (const auto& o : out) {
    total.pairs += o.pairs;
    total.strong_failures += o.strong_failures;
    total.weak_failures += o.weak_failures;
    if (o.first_fail_x >= 0 && total.first_fail_x < 0) {
      total.first_fail_x = o.first_fail_x;
      total.first_fail_y = o.first_fail_y;
    }
    if (!o.have) continue;
    bool better = !total.have || certainly_less(o.ratio, total.ratio) ||
                  (!certainly_less(total.ratio, o.ratio) &&
                   witness_less(pts[o.x].form, pts[o.y].form,
                                pts[total.x].form, pts[total.y].form));
    if (better) {
      total.have = true;
      total.ratio = o.ratio;
      total.x = o.x;
      total.y = o.y;
    }
  }

  CheckReport r;
  r.check_id = "separation.theorem";
  r.params = Json{{"X", X},
                  {"scale", scale.get_str()},
                  {"points", n},
                  {"pairs_within_radius", total.pairs}};
  r.passed = total.strong_failures == 0 && total.weak_failures == 0;
  r.prec_bits = prec_bits;
  if (total.have) {
    r.margin = to_decimal(total.ratio, 12);
    const auto& fx = pts[total.x].form;
    const auto& fy = pts[total.y].form;
    SeparationBound sb = separation_bound(fx.disc, fy.disc);
    r.witness = Json{{"x", form_json(fx)},
                     {"y", form_json(fy)},
                     {"bound", to_decimal(sb.value, 12).mid},
                     {"branch", sb.branch},
                     {"ratio", to_json(to_decimal(total.ratio, 12))}};
  } else {
    // No pair within the radius: every ratio exceeds 2.
    r.margin = {"2", "0"};
  }
  r.witness["strong_failures"] = total.strong_failures;
  r.witness["weak_failures"] = total.weak_failures;
  if (total.first_fail_x >= 0) {
    r.witness["first_failure"] =
        Json{{"x", form_json(pts[total.first_fail_x].form)},
             {"y", form_json(pts[total.first_fail_y].form)}};
  }
  r.wall_ms = elapsed_ms(t0);
  return r;
}

// ---------------------------------------------------------------------------
// Lower bounds at CM points

namespace {

constexpr int kCderivCount = 5;
const char* const kCderivNames[kCderivCount] = {
    "dist_zeta", "dist_i", "j_floor", "j_minus_1728_floor", "jprime_floor"};

struct CderivSlot {
  bool have[kCderivCount] = {};
  CertifiedReal ratio[kCderivCount];
  ReducedForm witness[kCderivCount];
  long failures[kCderivCount] = {};
  long points = 0;
};

// The five quantities and their bounds at one CM point, working precision w.
void cderiv_values(const ReducedForm& f, long w, bool jprime_only,
                   std::array<CertifiedReal, kCderivCount>& v,
                   std::array<CertifiedReal, kCderivCount>& b) {
  const long D = f.disc.abs();
  CertifiedReal absd = CertifiedReal::exact(D, w);
  Point tau = cm_point_fn(f);
  JValues jv = eval_j_and_prime(tau, w);
  v[4] = abs(jv.jprime);
  b[4] = CertifiedReal::exact(make_q(40000, mpz_class(D) * D), w);
  if (jprime_only) return;
  CertifiedComplex t = tau(w);
  v[0] = min(abs(t - zeta6_point()(w)), abs(t - zeta3_point()(w)));
  b[0] = sqrt(CertifiedReal::exact(3L, w)) / (4 * D);
  v[1] = abs(t - i_point()(w));
  b[1] = CertifiedReal::exact(make_q(3, 8 * D), w);
  v[2] = abs(jv.j);
  b[2] = CertifiedReal::exact(make_q(700, mpz_class(D) * D * D), w);
  v[3] = abs(jv.j - 1728);
  b[3] = CertifiedReal::exact(make_q(2000, mpz_class(D) * D), w);
}

bool is_elliptic_point(const ReducedForm& f) {
  return (f.disc.value == -3 && f.a == 1) || (f.disc.value == -4 && f.a == 1);
}

}  // namespace

CheckReport verify_cderiv(long X, long prec_bits, int workers, long jprime_X,
                          const PrecisionPolicy& policy) {
  if (X < 3) throw DomainError("verify_cderiv: X must be >= 3");
  auto t0 = std::chrono::steady_clock::now();
  const long top = std::max(X, jprime_X);
  const auto discs = discriminants_up_to(top);
  std::vector<CderivSlot> slots(discs.size());

  parallel_for(discs.size(), workers, [&](size_t di) {
    CderivSlot& s = slots[di];
    const bool jprime_only = discs[di].abs() > X;
    for (const auto& f : reduced_forms(discs[di])) {
      if (is_elliptic_point(f)) continue;
      ++s.points;
      bool decided[kCderivCount] = {};
      for (int i = 0; i < kCderivCount; ++i) decided[i] = jprime_only && i < 4;
      for (long w = prec_bits;; w *= 2) {
        if (w > policy.cap_bits) {
          throw PrecisionExhausted("cderiv comparison", policy.cap_bits);
        }
        std::array<CertifiedReal, kCderivCount> v, b;
        cderiv_values(f, w, jprime_only, v, b);
        bool all = true;
        for (int i = 0; i < kCderivCount; ++i) {
          if (decided[i]) continue;
          Decision d = decide_at_least(v[i], b[i]);
          if (d == Decision::kUndecided) {
            all = false;
            continue;
          }
          decided[i] = true;
          if (d == Decision::kFails) ++s.failures[i];
          CertifiedReal ratio = v[i] / b[i];
          if (!s.have[i] || certainly_less(ratio, s.ratio[i])) {
            s.have[i] = true;
            s.ratio[i] = ratio;
            s.witness[i] = f;
          }
        }
        if (all) break;
      }
    }
  });

  CderivSlot total;
  for (const auto& s : slots) {
    total.points += s.points;
    for (int i = 0; i < kCderivCount; ++i) {
      total.failures[i] += s.failures[i];
      if (!s.have[i]) continue;
      if (!total.have[i] || certainly_less(s.ratio[i], total.ratio[i])) {
        total.have[i] = true;
        total.ratio[i] = s.ratio[i];
        total.witness[i] = s.witness[i];
      }
    }
  }

  CheckReport r;
  r.check_id = "separation.cderiv";
  r.params = Json{{"X", X}, {"jprime_X", top}, {"points", total.points}};
  r.passed = true;
  r.prec_bits = prec_bits;
  bool have_margin = false;
  CertifiedReal margin;
  for (int i = 0; i < kCderivCount; ++i) {
    if (total.failures[i] != 0) r.passed = false;
    if (!total.have[i]) continue;
    r.witness[kCderivNames[i]] =
        Json{{"min_ratio", to_json(to_decimal(total.ratio[i], 12))},
             {"at", form_json(total.witness[i])},
             {"failures", total.failures[i]}};
    if (!have_margin || certainly_less(total.ratio[i], margin)) {
      margin = total.ratio[i];
      have_margin = true;
    }
  }
  if (have_margin) r.margin = to_decimal(margin, 12);
  for (size_t di = 0; di < discs.size(); ++di) {
    const CderivSlot& s = slots[di];
    if (s.points == 0) continue;
    Json item{{"disc", discs[di].value}};
    for (int i = 0; i < kCderivCount; ++i) {
      item[kCderivNames[i]] =
          s.have[i] ? s.ratio[i].mid_string(8) : std::string();
    }
    r.items.push_back(item);
  }
  r.wall_ms = elapsed_ms(t0);
  return r;
}

}  // namespace moduli
