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


#include "moduli/primel.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>

#include "moduli/errors.hpp"
#include "moduli/parallel.hpp"
#include "moduli/singular.hpp"

namespace moduli {

namespace {

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count());
}

long mod_pos(long v, long m) { return ((v % m) + m) % m; }

// Tabulated values the sweep is compared against.
const std::vector<long> kReferenceBad = {
    -39,  -47,  -55,  -56,  -63,  -68,  -79,  -84,  -87,  -103,
    -120, -127, -132, -135, -136, -168, -175, -180, -184, -196,
    -207, -228, -247, -280, -292, -312, -328, -340, -372, -388,
    -408, -520, -532, -568, -708, -760, -772, -1012};
const std::vector<long> kReferenceTwoElementary = {
    -84,  -120, -132, -168, -180, -228, -280, -312,
    -340, -372, -408, -520, -532, -708, -760, -1012};

std::mutex g_hilbert_mutex;
std::map<long, IntPolynomial> g_hilbert_cache;

IntPolynomial cached_hilbert(const Discriminant& d,
                             const PrecisionPolicy& policy) {
  {
    std::lock_guard<std::mutex> lock(g_hilbert_mutex);
    auto it = g_hilbert_cache.find(d.value);
    if (it != g_hilbert_cache.end()) return it->second;
  }
  IntPolynomial h = hilbert_class_polynomial(d, policy);
  std::lock_guard<std::mutex> lock(g_hilbert_mutex);
  g_hilbert_cache.emplace(d.value, h);
  return h;
}

// The enclosure may contain an integer.
bool maybe_integer(const CertifiedReal& v) {
  mpfr_t lo, hi;
  mpfr_init2(lo, v.prec() + 8);
  mpfr_init2(hi, v.prec() + 8);
  v.lower(lo);
  v.upper(hi);
  mpz_class a, b;
  mpfr_get_z(a.get_mpz_t(), lo, MPFR_RNDU);
  mpfr_get_z(b.get_mpz_t(), hi, MPFR_RNDD);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return a <= b;
}

bool maybe_integer(const CertifiedComplex& z) {
  return z.imag().contains(mpz_class(0)) && maybe_integer(z.real());
}

enum class Gate { kOk, kReject, kTooWide };

// Unique integers in each enclosure, or a reason to reject or escalate.
Gate integer_gate(const std::vector<CertifiedComplex>& c,
                  std::vector<mpz_class>& out) {
  out.assign(c.size(), mpz_class(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (!maybe_integer(c[i])) return Gate::kReject;
    if (!(c[i].imag().rad() < Mag::pow2(-1)) ||
        !c[i].real().unique_integer(out[i])) {
      return Gate::kTooWide;
    }
  }
  return Gate::kOk;
}

// Coefficients of H(X) / (X - r), low degree first.
std::vector<CertifiedComplex> deflate(const IntPolynomial& H,
                                      const CertifiedComplex& r) {
  const long h = H.degree();
  const long w = r.prec();
  std::vector<CertifiedComplex> q(h, CertifiedComplex(w));
  CertifiedComplex acc(CertifiedReal::exact(1L, w), CertifiedReal(w));
  q[h - 1] = acc;
  for (long k = h - 1; k >= 1; --k) {
    acc = acc * r + H.coeff(k);
    q[k - 1] = acc;
  }
  return q;
}

Json minor_json(const Minor& m) {
  return Json{{"i", m.i}, {"j", m.j}, {"k", m.k}, {"p", m.p}, {"q", m.q},
              {"minor", m.value.get_str()}};
}

}  // namespace

// ---------------------------------------------------------------------------
// Discriminant list

std::vector<Discriminant> bad_discriminants(long horizon) {
  std::vector<Discriminant> out;
  for (long n = 3; n <= horizon; ++n) {
    if (n % 4 != 0 && n % 4 != 3) continue;
    const long D = -n;
    const bool two_subs = mod_pos(D, 8) == 1;
    const long r16 = mod_pos(D, 16);
    const bool one_sub = r16 == 8 || r16 == 12;
    if (!two_subs && !one_sub) continue;
    Discriminant d = validate_discriminant(D);
    long h = class_number(d);
    if ((two_subs && h >= 4 && h <= 6) || (one_sub && h == 4)) {
      out.push_back(d);
    }
  }
  return out;
}

bool is_two_elementary(const Discriminant& d) {
  for (const auto& f : reduced_forms(d)) {
    if (!f.is_ambiguous()) return false;
  }
  return true;
}

std::vector<Discriminant> two_elementary_subset(long horizon) {
  std::vector<Discriminant> out;
  for (const auto& d : bad_discriminants(horizon)) {
    if (class_number(d) == 4 && is_two_elementary(d)) out.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ratio sets

AlphaSet alpha_set(const Discriminant& d, long prec_bits,
                   const PrecisionPolicy& policy) {
  const long h = class_number(d);
  if (h < 2) throw DomainError("alpha_set needs class number at least 2");
  for (long p = prec_bits;; p *= 2) {
    if (p > policy.cap_bits) {
      throw DegenerateDenominator("alpha_set(" + std::to_string(d.value) +
                                  "): conjugate difference not separated");
    }
    auto xs = orbit(d, p, Accuracy::kRelative, policy);
    AlphaSet a{d, {}, {}};
    bool separated = true;
    for (int i = 2; i <= h && separated; ++i) {
      for (int j = 2; j <= h && separated; ++j) {
        for (int k = j + 1; k <= h; ++k) {
          CertifiedComplex den = xs[j - 1].value - xs[k - 1].value;
          if (den.contains_zero()) {
            separated = false;
            break;
          }
          a.elements.push_back((xs[0].value - xs[i - 1].value) / den);
          a.triples.push_back({i, j, k});
        }
      }
    }
    if (separated) return a;
  }
}

MinImag min_imag(const AlphaSet& a) {
  if (a.elements.empty()) throw DomainError("min_imag of an empty set");
  MinImag m{abs(a.elements[0].imag()), 0};
  for (size_t e = 1; e < a.elements.size(); ++e) {
    CertifiedReal v = abs(a.elements[e].imag());
    if (v.to_double() < m.value.to_double()) m.index = e;
    m.value = min(m.value, v);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Galois polynomials

std::vector<RatPolynomial> galois_polynomials(const Discriminant& dx,
                                              const Discriminant& dy,
                                              const PrecisionPolicy& policy) {
  const IntPolynomial Hx = cached_hilbert(dx, policy);
  const IntPolynomial Hy = cached_hilbert(dy, policy);
  const long h = Hx.degree();
  const std::string tag =
      "(" + std::to_string(dx.value) + ", " + std::to_string(dy.value) + ")";
  if (Hy.degree() != h) {
    throw ReconstructionFailed("class numbers differ for " + tag);
  }
  const RatPolynomial Hq = Hx.to_rational();
  const RatPolynomial Hyq = Hy.to_rational();
  const auto dinv = inverse_mod(Hx.derivative().to_rational(), Hq);
  if (!dinv) throw ReconstructionFailed("H' not invertible for " + tag);

  const long start = hilbert_start_bits(dx) + hilbert_start_bits(dy) + 64;
  const long cap = std::max(policy.cap_bits, 4 * start);
  for (long w = start;; w = std::min(2 * w, cap)) {
    const auto xs = orbit_at(dx, w);
    const auto ys = orbit_at(dy, w);
    std::vector<std::vector<CertifiedComplex>> q(h);
    for (long l = 0; l < h; ++l) q[l] = deflate(Hx, xs[l]);

    std::vector<RatPolynomial> gs(h);
    bool too_wide = false;
    for (long m = 0; m < h; ++m) {
      bool found = false;
      std::vector<long> rest;
      for (long l = 0; l < h; ++l) {
        if (l != m) rest.push_back(l);
      }
      do {
        // pi(0) = m, pi(l) = rest[l - 1].
        auto yat = [&](long l) -> const CertifiedComplex& {
          return ys[l == 0 ? m : rest[l - 1]];
        };
        CertifiedComplex trace(w);
        for (long l = 0; l < h; ++l) trace = trace + xs[l] * yat(l);
        if (!maybe_integer(trace)) continue;

        std::vector<CertifiedComplex> G(h, CertifiedComplex(w));
        for (long l = 0; l < h; ++l) {
          for (long k = 0; k < h; ++k) G[k] = G[k] + q[l][k] * yat(l);
        }
        std::vector<mpz_class> gz;
        Gate gate = integer_gate(G, gz);
        if (gate == Gate::kTooWide) too_wide = true;
        if (gate != Gate::kOk) continue;
        RatPolynomial g =
            (IntPolynomial(gz).to_rational() * *dinv) % Hq;
        if (!compose_mod(Hyq, g, Hq).is_zero()) continue;
        if (!g.eval(xs[0]).overlaps(ys[m])) continue;
        gs[m] = g;
        found = true;
      } while (!found && std::next_permutation(rest.begin(), rest.end()));
      if (!found) break;
    }
    bool complete = true;
    for (long m = 0; m < h && complete; ++m) {
      if (gs[m].is_zero() && !(Hy.coeff(0) == 0 && h == 1)) complete = false;
      for (long k = 0; k < m && complete; ++k) {
        if (gs[k] == gs[m]) complete = false;
      }
    }
    if (complete) return gs;
    if (!too_wide || w >= cap) {
      throw ReconstructionFailed("no certified conjugate polynomials for " +
                                 tag);
    }
  }
}

std::vector<RatPolynomial> conjugate_polynomials(
    const Discriminant& d, const PrecisionPolicy& policy) {
  auto fs = galois_polynomials(d, d, policy);
  if (!(fs.front() == RatPolynomial::x())) {
    throw ReconstructionFailed("identity conjugate is not X for " +
                               std::to_string(d.value));
  }
  return fs;
}

const std::vector<std::pair<long, long>>& cross_pairs() {
  static const std::vector<std::pair<long, long>> p = {
      {-96, -192},  {-96, -288},  {-120, -160}, {-120, -280}, {-120, -760},
      {-160, -280}, {-160, -760}, {-180, -240}, {-192, -288}, {-195, -520},
      {-195, -715}, {-280, -760}, {-340, -595}, {-480, -960}, {-520, -715}};
  return p;
}

bool is_cross_pair(long dx, long dy) {
  for (const auto& [a, b] : cross_pairs()) {
    if ((a == dx && b == dy) || (a == dy && b == dx)) return true;
  }
  return false;
}

std::vector<RatPolynomial> cross_pair_polynomials(
    const Discriminant& dx, const Discriminant& dy,
    const PrecisionPolicy& policy) {
  if (!is_cross_pair(dx.value, dy.value)) {
    throw NotInClassifiedList(dx.value, dy.value);
  }
  return galois_polynomials(dx, dy, policy);
}

// ---------------------------------------------------------------------------
// Non-proportionality

std::optional<Minor> nonzero_minor(const RatPolynomial& u,
                                   const RatPolynomial& v) {
  if (u.is_zero() || v.is_zero()) return std::nullopt;
  const long n = std::max(u.degree(), v.degree());
  for (long p = 0; p <= n; ++p) {
    for (long q = p + 1; q <= n; ++q) {
      mpq_class m = u.coeff(p) * v.coeff(q) - u.coeff(q) * v.coeff(p);
      if (sgn(m) != 0) {
        Minor out;
        out.p = p;
        out.q = q;
        out.value = m;
        return out;
      }
    }
  }
  return std::nullopt;
}

Nonproportionality nonproportional(const std::vector<RatPolynomial>& fs) {
  Nonproportionality r;
  const int h = static_cast<int>(fs.size());
  for (int i = 2; i <= h; ++i) {
    const RatPolynomial u = fs[0] - fs[i - 1];
    for (int j = 2; j <= h; ++j) {
      for (int k = j + 1; k <= h; ++k) {
        auto m = nonzero_minor(u, fs[j - 1] - fs[k - 1]);
        if (!m) {
          r.holds = false;
          if (!r.counterexample) r.counterexample = AlphaTriple{i, j, k};
          continue;
        }
        m->i = i;
        m->j = j;
        m->k = k;
        r.minors.push_back(*m);
      }
    }
  }
  return r;
}

Nonproportionality nonproportional(const std::vector<RatPolynomial>& fs,
                                   const std::vector<RatPolynomial>& gs) {
  Nonproportionality r;
  const int hf = static_cast<int>(fs.size());
  const int hg = static_cast<int>(gs.size());
  for (int i = 2; i <= hf; ++i) {
    const RatPolynomial u = fs[0] - fs[i - 1];
    for (int j = 1; j <= hg; ++j) {
      for (int k = j + 1; k <= hg; ++k) {
        auto m = nonzero_minor(u, gs[j - 1] - gs[k - 1]);
        if (!m) {
          r.holds = false;
          if (!r.counterexample) r.counterexample = AlphaTriple{i, j, k};
          continue;
        }
        m->i = i;
        m->j = j;
        m->k = k;
        r.minors.push_back(*m);
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Classification

const char* to_string(PrimitiveVerdict::Tag t) {
  switch (t) {
    case PrimitiveVerdict::Tag::kGenerates:
      return "Generates";
    case PrimitiveVerdict::Tag::kExceptionExampleQuad:
      return "ExceptionExampleQuad";
    case PrimitiveVerdict::Tag::kTrivialEqual:
      return "TrivialEqual";
    case PrimitiveVerdict::Tag::kSumDiffCase:
      return "SumDiffCase";
    case PrimitiveVerdict::Tag::kOutOfClassification:
      return "OutOfClassification";
  }
  return "?";
}

std::optional<mpq_class> example_quad_alpha(const Discriminant& dx,
                                            const Discriminant& dy) {
  if (class_number(dx) != 2 || class_number(dy) != 2) return std::nullopt;
  if (dx == dy) return mpq_class(1);
  const mpz_class ex = quadratic_discriminant(cached_hilbert(dx, {}));
  const mpz_class ey = quadratic_discriminant(cached_hilbert(dy, {}));
  const mpq_class ratio = make_q(ex, ey);
  if (sgn(ratio) <= 0) return std::nullopt;
  if (!mpz_perfect_square_p(ratio.get_num_mpz_t()) ||
      !mpz_perfect_square_p(ratio.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class n = sqrt(ratio.get_num());
  mpz_class d = sqrt(ratio.get_den());
  return mpq_class(-make_q(n, d));
}

PrimitiveVerdict classify_primitive(const Discriminant& dx,
                                    const Discriminant& dy,
                                    const mpq_class& alpha) {
  if (sgn(alpha) == 0) throw InvalidAlpha("alpha must be nonzero");
  using Tag = PrimitiveVerdict::Tag;
  PrimitiveVerdict v;
  if (dx == dy && class_number(dx) == 1) {
    v.tag = Tag::kTrivialEqual;
    v.reason = "class number 1: x = y is rational";
    return v;
  }
  if (abs(alpha) == 1) {
    if (dx == dy) {
      v.tag = Tag::kSumDiffCase;
      v.subfield_index = alpha == 1 ? 2 : 1;
      v.reason = alpha == 1 ? "x + y has index at most 2 in Q(x, y)"
                            : "x - y generates Q(x, y)";
    } else {
      v.tag = Tag::kGenerates;
      v.reason = "alpha = +-1 with distinct discriminants";
    }
    return v;
  }
  if (dx != dy) {
    if (auto a0 = example_quad_alpha(dx, dy);
        a0 && (alpha == *a0 || alpha == -*a0)) {
      v.tag = Tag::kExceptionExampleQuad;
      v.alpha = alpha;
      v.reason = "class number 2, same quadratic field, alpha = -+(x - x')/(y - y')";
      return v;
    }
  }
  v.tag = Tag::kGenerates;
  v.reason = "no exceptional pattern";
  return v;
}

namespace {

// Orbit sorted by decreasing real part.
std::vector<CertifiedComplex> by_real_part(const Discriminant& d, long prec) {
  std::vector<CertifiedComplex> v;
  for (auto& s : orbit(d, prec)) v.push_back(s.value);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.real().to_double() > b.real().to_double();
  });
  return v;
}

}  // namespace

bool exception_collides(const Discriminant& dx, const Discriminant& dy,
                        const mpq_class& alpha, long prec_bits) {
  auto a0 = example_quad_alpha(dx, dy);
  if (!a0 || (alpha != *a0 && alpha != -*a0)) return false;
  auto xs = by_real_part(dx, prec_bits);
  auto ys = by_real_part(dy, prec_bits);
  const long w = xs[0].prec();
  CertifiedReal a = CertifiedReal::exact(alpha, w);
  // Same sign as the convention pairs y with x; the other sign pairs y'.
  const bool same = (alpha == *a0);
  size_t yb = (dx == dy) ? 1 : 0;  // for equal discriminants y = x'
  if (!same) yb = 1 - yb;
  CertifiedComplex lhs = xs[0] + ys[yb] * a;
  CertifiedComplex rhs = xs[1] + ys[1 - yb] * a;
  return lhs.overlaps(rhs);
}

bool certify_generates(const Discriminant& dx, const Discriminant& dy,
                       const mpq_class& alpha, long prec_bits,
                       const PrecisionPolicy& policy) {
  for (long p = prec_bits;; p *= 2) {
    if (p > policy.cap_bits) {
      throw PrecisionExhausted("certify_generates", policy.cap_bits);
    }
    auto xs = orbit(dx, p, Accuracy::kRelative, policy);
    auto ys = orbit(dy, p, Accuracy::kRelative, policy);
    const long w = xs[0].value.prec();
    CertifiedReal a = CertifiedReal::exact(alpha, w);
    bool undecided = false;
    for (size_t b = 0; b < ys.size(); ++b) {
      if (dx == dy && b == 0) continue;  // y = x is not a distinct pair
      CertifiedComplex s = xs[0].value + ys[b].value * a;
      for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t k = 0; k < ys.size(); ++k) {
          if (i == 0 && k == b) continue;
          CertifiedComplex t = xs[i].value + ys[k].value * a;
          if (s.overlaps(t)) undecided = true;
        }
      }
    }
    if (!undecided) return true;
  }
}

// ---------------------------------------------------------------------------
// Reports

CheckReport verify_bad_list(long horizon) {
  auto t0 = std::chrono::steady_clock::now();
  auto bad = bad_discriminants(horizon);
  std::vector<long> got, bold;
  for (const auto& d : bad) {
    got.push_back(d.value);
    if (class_number(d) == 4 && is_two_elementary(d)) bold.push_back(d.value);
  }
  CheckReport r;
  r.check_id = "primel.bad_list";
  r.params = Json{{"horizon", horizon}};
  r.passed = got == kReferenceBad && bold == kReferenceTwoElementary;
  r.margin = {std::to_string(got.size()), "0"};
  r.witness = Json{{"count", got.size()},
                   {"two_elementary_count", bold.size()},
                   {"list", got},
                   {"two_elementary", bold},
                   {"largest", got.empty() ? 0 : got.back()}};
  r.warnings.push_back(
      "complete assuming no discriminant with h in {4, 5, 6} lies beyond "
      "|D| = " + std::to_string(horizon));
  for (const auto& d : bad) {
    r.items.push_back(Json{{"disc", d.value},
                           {"class_number", class_number(d)},
                           {"two_elementary", is_two_elementary(d)}});
  }
  r.wall_ms = elapsed_ms(t0);
  return r;
}

CheckReport verify_alpha_sets(long prec_bits, int workers,
                              const PrecisionPolicy& policy) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Discriminant> targets;
  for (long D : kReferenceBad) {
    auto d = validate_discriminant(D);
    if (!is_two_elementary(d)) targets.push_back(d);
  }
  std::vector<MinImag> mins(targets.size());
  std::vector<AlphaSet> sets(targets.size());
  parallel_for(targets.size(), workers, [&](size_t t) {
    sets[t] = alpha_set(targets[t], prec_bits, policy);
    mins[t] = min_imag(sets[t]);
  });
  const CertifiedReal floor = CertifiedReal::exact(345L, prec_bits);
  CheckReport r;
  r.check_id = "primel.alpha_sets";
  r.params = Json{{"discriminants", targets.size()}, {"floor", 345}};
  r.passed = !targets.empty();
  size_t worst = 0;
  for (size_t t = 0; t < targets.size(); ++t) {
    bool ok = certainly_less_equal(floor, mins[t].value);
    r.passed = r.passed && ok;
    if (mins[t].value.to_double() < mins[worst].value.to_double()) worst = t;
    const auto& tr = sets[t].triples[mins[t].index];
    r.items.push_back(Json{{"disc", targets[t].value},
                           {"elements", sets[t].elements.size()},
                           {"min_imag", mins[t].value.mid_string(12)},
                           {"min_imag_rad", mins[t].value.rad_string()},
                           {"triple", {tr.i, tr.j, tr.k}},
                           {"passed", ok}});
  }
  if (!targets.empty()) {
    r.margin = to_decimal(mins[worst].value, 12);
    const auto& tr = sets[worst].triples[mins[worst].index];
    r.witness = Json{{"disc", targets[worst].value},
                     {"triple", {tr.i, tr.j, tr.k}}};
  }
  r.prec_bits = prec_bits;
  r.wall_ms = elapsed_ms(t0);
  return r;
}

CheckReport verify_two_elementary_polynomials(int workers,
                                              const PrecisionPolicy& policy) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Discriminant> targets;
  for (long D : kReferenceTwoElementary) targets.push_back(validate_discriminant(D));
  std::vector<std::vector<RatPolynomial>> fs(targets.size());
  std::vector<Nonproportionality> np(targets.size());
  parallel_for(targets.size(), workers, [&](size_t t) {
    fs[t] = conjugate_polynomials(targets[t], policy);
    np[t] = nonproportional(fs[t]);
  });
  CheckReport r;
  r.check_id = "primel.two_elementary";
  r.params = Json{{"discriminants", targets.size()}};
  r.passed = !targets.empty();
  size_t certificates = 0;
  for (size_t t = 0; t < targets.size(); ++t) {
    long maxdeg = 0;
    for (const auto& f : fs[t]) maxdeg = std::max(maxdeg, f.degree());
    bool ok = np[t].holds && maxdeg <= 3;
    r.passed = r.passed && ok;
    certificates += np[t].minors.size();
    Json polys = Json::array();
    for (const auto& f : fs[t]) polys.push_back(f.to_string());
    Json minors = Json::array();
    for (const auto& m : np[t].minors) minors.push_back(minor_json(m));
    r.items.push_back(Json{{"disc", targets[t].value},
                           {"max_degree", maxdeg},
                           {"certificates", np[t].minors.size()},
                           {"passed", ok},
                           {"polynomials", polys},
                           {"minors", minors}});
    if (!np[t].holds && !r.witness.contains("counterexample")) {
      const auto& c = *np[t].counterexample;
      r.witness["counterexample"] =
          Json{{"disc", targets[t].value}, {"triple", {c.i, c.j, c.k}}};
    }
  }
  r.margin = {std::to_string(certificates), "0"};
  r.witness["certificates"] = certificates;
  r.wall_ms = elapsed_ms(t0);
  return r;
}

CheckReport verify_cross_pairs(
    int workers, const std::vector<std::pair<long, long>>& subset,
    const PrecisionPolicy& policy) {
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& [a, b] : subset) {
    if (!is_cross_pair(a, b)) throw NotInClassifiedList(a, b);
  }
  const auto& pairs = subset.empty() ? cross_pairs() : subset;
  std::vector<Nonproportionality> np(pairs.size());
  std::vector<std::vector<RatPolynomial>> gs(pairs.size());
  // Warm the Hilbert cache in parallel over distinct discriminants.
  std::vector<long> ds;
  for (const auto& [a, b] : pairs) {
    ds.push_back(a);
    ds.push_back(b);
  }
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  parallel_for(ds.size(), workers, [&](size_t i) {
    cached_hilbert(validate_discriminant(ds[i]), policy);
  });
  parallel_for(pairs.size(), workers, [&](size_t p) {
    auto dx = validate_discriminant(pairs[p].first);
    auto dy = validate_discriminant(pairs[p].second);
    auto fs = conjugate_polynomials(dx, policy);
    gs[p] = cross_pair_polynomials(dx, dy, policy);
    np[p] = nonproportional(fs, gs[p]);
  });
  CheckReport r;
  r.check_id = "primel.cross_pairs";
  r.params = Json{{"pairs", pairs.size()}};
  r.passed = !pairs.empty();
  size_t certificates = 0;
  for (size_t p = 0; p < pairs.size(); ++p) {
    r.passed = r.passed && np[p].holds;
    certificates += np[p].minors.size();
    Json polys = Json::array();
    for (const auto& g : gs[p]) polys.push_back(g.to_string());
    r.items.push_back(Json{{"dx", pairs[p].first},
                           {"dy", pairs[p].second},
                           {"class_number", gs[p].size()},
                           {"certificates", np[p].minors.size()},
                           {"passed", np[p].holds},
                           {"g", polys}});
    if (!np[p].holds && !r.witness.contains("counterexample")) {
      const auto& c = *np[p].counterexample;
      r.witness["counterexample"] = Json{{"dx", pairs[p].first},
                                         {"dy", pairs[p].second},
                                         {"triple", {c.i, c.j, c.k}}};
    }
  }
  r.margin = {std::to_string(certificates), "0"};
  r.witness["certificates"] = certificates;
  r.wall_ms = elapsed_ms(t0);
  return r;
}

}  // namespace moduli
