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

#include "moduli/modular.hpp"

#include <algorithm>
#include <cmath>

#include "moduli/errors.hpp"
#include "moduli/jseries.hpp"
#include "moduli/parallel.hpp"

namespace moduli {

namespace {

constexpr double kLog2TwoPi = 2.6515;  // log2(2 pi), rounded up
// Upper bounds for zeta(3) and zeta(5): sigma_k(n) <= zeta(k) n^k.
constexpr double kZeta3Up = 1.2021;
constexpr double kZeta5Up = 1.0370;

mpq_class pow_q(const mpq_class& b, int k) {
  mpq_class r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

CertifiedReal two_pi(long w) { return mul_2si(CertifiedReal::pi(w), 1); }

CertifiedComplex complex_one(long w) {
  return {CertifiedReal::exact(1L, w), CertifiedReal(w)};
}

// Upper bound for |q| as a positive double.
double t_upper(const CertifiedReal& t) {
  double u = t.upper_double();
  return u < 1e-300 ? 1e-300 : u;
}

struct Nome {
  CertifiedComplex q;
  CertifiedComplex qinv;
  double t;
};

Nome nome(const CertifiedComplex& z) {
  const long w = z.prec();
  if (!(z.imag().lower_double() > 0.49)) {
    throw DomainError("q-expansion evaluation requires Im z >= 1/2");
  }
  CertifiedReal tp = two_pi(w);
  CertifiedReal ang = tp * z.real();
  CertifiedReal ty = tp * z.imag();
  CertifiedReal t = exp(-ty);
  CertifiedReal tinv = exp(ty);
  CertifiedReal c = cos(ang);
  CertifiedReal s = sin(ang);
  return {{t * c, t * s}, {tinv * c, -(tinv * s)}, t_upper(t)};
}

// sum_{n=0}^{N} c[n] q^n.
CertifiedComplex horner(const std::vector<mpz_class>& c, long N,
                        const CertifiedComplex& q) {
  const long w = q.prec();
  CertifiedComplex acc(CertifiedReal::exact(c[N], w), CertifiedReal(w));
  for (long n = N - 1; n >= 0; --n) mul_add_into(acc, q, c[n]);
  return acc;
}

CertifiedReal horner_real(const std::vector<mpz_class>& c, long N,
                          const CertifiedReal& t) {
  const long w = t.prec();
  CertifiedReal acc = CertifiedReal::exact(c[N], w);
  for (long n = N - 1; n >= 0; --n) acc = acc * t + c[n];
  return acc;
}

double target_log2(long w) { return -static_cast<double>(w) - 4.0; }

// 1 + |mid|, from below.
Mag scale_lower(const CertifiedComplex& v) {
  Mag m = max(Mag::lower_abs(v.real().mid()), Mag::lower_abs(v.imag().mid()));
  return Mag::add_down(Mag::pow2(0), m);
}

bool meets(const CertifiedComplex& v, long prec) {
  if (!v.is_finite()) return false;
  return v.radius() <= Mag::mul_down(Mag::pow2(1 - prec), scale_lower(v));
}

bool meets(const CertifiedReal& v, long prec) {
  if (!v.is_finite()) return false;
  Mag s = Mag::add_down(Mag::pow2(0), Mag::lower_abs(v.mid()));
  return v.rad() <= Mag::mul_down(Mag::pow2(1 - prec), s);
}

bool meets(const JValues& v, long prec) {
  return meets(v.j, prec) && meets(v.jprime, prec);
}

template <class F>
auto escalate(long prec, const PrecisionPolicy& policy, const char* what,
              F attempt) -> decltype(attempt(0L)) {
  long w = std::max(policy.start_bits, prec + 32);
  w = std::min(w, std::max(policy.cap_bits, policy.start_bits));
  for (;;) {
    auto v = attempt(w);
    if (meets(v, prec)) return v;
    if (w >= policy.cap_bits) throw PrecisionExhausted(what, policy.cap_bits);
    w = std::min(2 * w, policy.cap_bits);
  }
}

struct RealNome {
  CertifiedReal t;
  CertifiedReal tinv;
  double t_up;
};

RealNome real_nome(const CertifiedReal& y) {
  if (!y.certainly_positive() || y.lower_double() < 0.1) {
    throw DomainError("envelope evaluation requires y >= 0.1");
  }
  CertifiedReal ty = two_pi(y.prec()) * y;
  CertifiedReal t = exp(-ty);
  return {t, exp(ty), t_upper(t)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Points

Point exact_point(const mpq_class& re, const mpq_class& im_coeff,
                  const mpz_class& radicand) {
  return [re, im_coeff, radicand](long prec) {
    CertifiedReal im = CertifiedReal::exact(im_coeff, prec + 8);
    if (radicand != 1) im = im * sqrt(CertifiedReal::exact(radicand, prec + 8));
    return CertifiedComplex(CertifiedReal::exact(re, prec), im.with_prec(prec));
  };
}

Point dyadic_point(double re, double im) {
  return [re, im](long prec) {
    long p = std::max(prec, 64L);
    return CertifiedComplex(CertifiedReal::from_double(re, p),
                            CertifiedReal::from_double(im, p));
  };
}

Point zeta6_point() { return exact_point(make_q(1, 2), make_q(1, 2), 3); }
Point zeta3_point() { return exact_point(make_q(-1, 2), make_q(1, 2), 3); }
Point i_point() { return exact_point(0, 1, 1); }

RealPoint exact_real(const mpq_class& v) {
  return [v](long prec) { return CertifiedReal::exact(v, prec); };
}

RealPoint surd_real(const mpq_class& a, const mpq_class& b, const mpz_class& c) {
  return [a, b, c](long prec) {
    CertifiedReal s = CertifiedReal::exact(b, prec + 8) *
                      sqrt(CertifiedReal::exact(c, prec + 8));
    return (CertifiedReal::exact(a, prec + 8) + s).with_prec(prec);
  };
}

// ---------------------------------------------------------------------------
// Single-shot evaluation

JValues j_and_jprime_at(const CertifiedComplex& z) {
  const long w = z.prec();
  Nome nm = nome(z);
  JSeriesContext ctx(w, nm.t, 1, target_log2(w));
  const auto& tab = ctx.table();
  const long N = ctx.truncation();
  double tail0 = tail_log2(N, 0, kJCoeffBeta, 0.0, nm.t);

  CertifiedComplex j = nm.qinv + horner(tab.c, N, nm.q);
  j.add_error(Mag::exp2_up(tail0));

  CertifiedComplex inner = horner(tab.nc, N, nm.q) - nm.qinv;
  CertifiedComplex jp = (inner * two_pi(w)).mul_i();
  jp.add_error(Mag::exp2_up(ctx.tail_log2() + kLog2TwoPi));
  return {std::move(j), std::move(jp)};
}

CertifiedComplex j_at(const CertifiedComplex& z) {
  const long w = z.prec();
  Nome nm = nome(z);
  JSeriesContext ctx(w, nm.t, 0, target_log2(w));
  CertifiedComplex j = nm.qinv + horner(ctx.table().c, ctx.truncation(), nm.q);
  j.add_error(Mag::exp2_up(ctx.tail_log2()));
  return j;
}

CertifiedComplex jprime_at(const CertifiedComplex& z) {
  const long w = z.prec();
  Nome nm = nome(z);
  JSeriesContext ctx(w, nm.t, 1, target_log2(w));
  CertifiedComplex inner = horner(ctx.table().nc, ctx.truncation(), nm.q) - nm.qinv;
  CertifiedComplex jp = (inner * two_pi(w)).mul_i();
  jp.add_error(Mag::exp2_up(ctx.tail_log2() + kLog2TwoPi));
  return jp;
}

CertifiedComplex eisenstein_at(const CertifiedComplex& z, int weight) {
  if (weight != 4 && weight != 6) throw DomainError("weight must be 4 or 6");
  const long w = z.prec();
  Nome nm = nome(z);
  const unsigned k = weight == 4 ? 3 : 5;
  const long coef = weight == 4 ? 240 : -504;
  const double log2a = std::log2(std::fabs(static_cast<double>(coef)) *
                                 (weight == 4 ? kZeta3Up : kZeta5Up));
  long N = truncation_for(static_cast<int>(k), 0.0, log2a, nm.t, target_log2(w));
  std::vector<mpz_class> co = divisor_sigma_table(N, k);
  co[0] = 1;
  for (long n = 1; n <= N; ++n) co[n] *= coef;
  CertifiedComplex e = horner(co, N, nm.q);
  e.add_error(Mag::exp2_up(tail_log2(N, static_cast<int>(k), 0.0, log2a, nm.t)));
  return e;
}

CertifiedComplex delta_eisenstein_at(const CertifiedComplex& z) {
  CertifiedComplex e4 = eisenstein_at(z, 4);
  CertifiedComplex e6 = eisenstein_at(z, 6);
  CertifiedComplex num = e4 * e4 * e4 - e6 * e6;
  return {num.real() / 1728, num.imag() / 1728};
}

CertifiedComplex delta_product_at(const CertifiedComplex& z) {
  const long w = z.prec();
  Nome nm = nome(z);
  const double t = nm.t;
  if (t >= 0.5) throw DomainError("delta_product_at: |q| too large");
  // |prod_{n>N} (1 - q^n)^24 - 1| <= exp(u) - 1 <= 2u with
  // u = 24 t^{N+1} / (1 - t)^2 once u <= 1.
  const double target = target_log2(w);
  long N = 1;
  double log2u = 0.0;
  for (;; ++N) {
    log2u = std::log2(24.0) + (N + 1) * std::log2(t) - 2.0 * std::log2(1.0 - t);
    log2u += 1e-9 * std::fabs(log2u) + 0.01;
    if (log2u < 0.0 && log2u + 1.0 <= target) break;
  }
  CertifiedComplex one = complex_one(w);
  CertifiedComplex p = one;
  CertifiedComplex qn = nm.q;
  for (long n = 1; n <= N; ++n) {
    p = p * (one - qn);
    if (n < N) qn = qn * nm.q;
  }
  CertifiedComplex d = nm.q * pow(p, 24U);
  d.add_error(abs(d).abs_upper() * Mag::exp2_up(log2u + 1.0));
  return d;
}

CertifiedReal envelope_f_at(const CertifiedReal& y) {
  const long w = y.prec();
  RealNome nm = real_nome(y);
  JSeriesContext ctx(w, nm.t_up, 0, target_log2(w));
  CertifiedReal f = nm.tinv + horner_real(ctx.table().c, ctx.truncation(), nm.t);
  f.add_error(Mag::exp2_up(ctx.tail_log2()));
  return f;
}

CertifiedReal envelope_g_at(const CertifiedReal& y) {
  const long w = y.prec();
  RealNome nm = real_nome(y);
  JSeriesContext ctx(w, nm.t_up, 1, target_log2(w));
  CertifiedReal inner = nm.tinv + horner_real(ctx.table().nc, ctx.truncation(), nm.t);
  inner.add_error(Mag::exp2_up(ctx.tail_log2()));
  return two_pi(w) * inner;
}

CertifiedReal envelope_g_prime_at(const CertifiedReal& y) {
  const long w = y.prec();
  RealNome nm = real_nome(y);
  JSeriesContext ctx(w, nm.t_up, 2, target_log2(w));
  CertifiedReal inner = nm.tinv - horner_real(ctx.table().n2c, ctx.truncation(), nm.t);
  inner.add_error(Mag::exp2_up(ctx.tail_log2()));
  return sqr(two_pi(w)) * inner;
}

CertifiedReal ijprime_imag_axis_at(const CertifiedReal& y) {
  const long w = y.prec();
  RealNome nm = real_nome(y);
  JSeriesContext ctx(w, nm.t_up, 1, target_log2(w));
  CertifiedReal inner = nm.tinv - horner_real(ctx.table().nc, ctx.truncation(), nm.t);
  inner.add_error(Mag::exp2_up(ctx.tail_log2()));
  return two_pi(w) * inner;
}

// ---------------------------------------------------------------------------
// Escalating evaluation

CertifiedComplex eval_j(const Point& z, long prec_bits,
                        const PrecisionPolicy& policy) {
  return escalate(prec_bits, policy, "eval_j",
                  [&](long w) { return j_at(z(w)); });
}

CertifiedComplex eval_j_prime(const Point& z, long prec_bits,
                              const PrecisionPolicy& policy) {
  return escalate(prec_bits, policy, "eval_j_prime",
                  [&](long w) { return jprime_at(z(w)); });
}

JValues eval_j_and_prime(const Point& z, long prec_bits,
                         const PrecisionPolicy& policy) {
  return escalate(prec_bits, policy, "eval_j_and_prime",
                  [&](long w) { return j_and_jprime_at(z(w)); });
}

CertifiedComplex eval_eisenstein(const Point& z, int weight, long prec_bits,
                                 const PrecisionPolicy& policy) {
  return escalate(prec_bits, policy, "eval_eisenstein",
                  [&](long w) { return eisenstein_at(z(w), weight); });
}

CertifiedComplex eval_delta_form(const Point& z, long prec_bits,
                                 const PrecisionPolicy& policy) {
  return escalate(prec_bits, policy, "eval_delta_form",
                  [&](long w) { return delta_eisenstein_at(z(w)); });
}

CertifiedComplex eval_delta_product(const Point& z, long prec_bits,
                                    const PrecisionPolicy& policy) {
  return escalate(prec_bits, policy, "eval_delta_product",
                  [&](long w) { return delta_product_at(z(w)); });
}

CertifiedReal envelope_f(const RealPoint& y, long prec_bits,
                         const PrecisionPolicy& policy) {
  return escalate(prec_bits, policy, "envelope_f",
                  [&](long w) { return envelope_f_at(y(w)); });
}

CertifiedReal envelope_g(const RealPoint& y, long prec_bits,
                         const PrecisionPolicy& policy) {
  return escalate(prec_bits, policy, "envelope_g",
                  [&](long w) { return envelope_g_at(y(w)); });
}

CertifiedReal envelope_g_prime(const RealPoint& y, long prec_bits,
                               const PrecisionPolicy& policy) {
  return escalate(prec_bits, policy, "envelope_g_prime",
                  [&](long w) { return envelope_g_prime_at(y(w)); });
}

// ---------------------------------------------------------------------------
// y0

CertifiedReal Y0Bracket::interval() const {
  CertifiedReal a = CertifiedReal::exact(lo, 128);
  CertifiedReal b = CertifiedReal::exact(hi, 128);
  return CertifiedReal::hull(a, b);
}

Y0Bracket locate_y0(long prec_bits) {
  Y0Bracket br;
  br.lo = make_q(1018, 1000);
  br.hi = make_q(1019, 1000);
  br.g_prime_lo = envelope_g_prime(exact_real(br.lo), prec_bits);
  br.g_prime_hi = envelope_g_prime(exact_real(br.hi), prec_bits);
  if (!br.g_prime_lo.certainly_negative() || !br.g_prime_hi.certainly_positive()) {
    throw Error("locate_y0: g' does not change sign on [1.018, 1.019]");
  }
  const mpq_class width = make_q(1, 1000000);
  while (br.hi - br.lo > width) {
    mpq_class mid = (br.lo + br.hi) / 2;
    CertifiedReal v = envelope_g_prime(exact_real(mid), prec_bits);
    if (v.certainly_negative()) {
      br.lo = mid;
      br.g_prime_lo = v;
    } else if (v.certainly_positive()) {
      br.hi = mid;
      br.g_prime_hi = v;
    } else {
      break;  // mid is within the enclosure of the root; bracket stays valid
    }
    ++br.steps;
  }
  return br;
}

// ---------------------------------------------------------------------------
// Elliptic constants

CertifiedReal EllipticConstants::abs_A0() const { return abs(A0); }
CertifiedReal EllipticConstants::abs_A1() const { return abs(A1); }

EllipticConstants elliptic_constants_gamma(long prec_bits) {
  const long w = prec_bits + 32;
  CertifiedReal pi = CertifiedReal::pi(w);
  CertifiedReal g13 = gamma_small(CertifiedReal::exact(make_q(1, 3), w));
  CertifiedReal g14 = gamma_small(CertifiedReal::exact(make_q(1, 4), w));
  CertifiedReal a0 = pow(g13, 18) / pow(pi, 9) * (-27L);
  CertifiedReal a1 = pow(g14, 8) / pow(pi, 4) * (-81L);
  return {{CertifiedReal(w), a0}, {a1, CertifiedReal(w)}};
}

CertifiedComplex taylor_coefficient_cauchy(const Point& center, int k,
                                           const mpq_class& h,
                                           const mpq_class& outer_radius,
                                           int m, long prec_bits) {
  if (!(h > 0) || !(outer_radius > h) || m <= k) {
    throw DomainError("taylor_coefficient_cauchy: need 0 < h < R and m > k");
  }
  const long w = prec_bits + 32 + 4 * k;
  CertifiedComplex z0 = center(w);
  CertifiedReal hb = CertifiedReal::exact(h, w);
  CertifiedReal tp = two_pi(w);
  CertifiedComplex sum(w);
  for (int l = 0; l < m; ++l) {
    CertifiedReal theta = tp * CertifiedReal::exact(make_q(l, m), w);
    CertifiedReal ktheta = tp * CertifiedReal::exact(make_q(static_cast<long>(k) * l, m), w);
    CertifiedComplex zl = z0 + CertifiedComplex(hb * cos(theta), hb * sin(theta));
    CertifiedComplex rot(cos(ktheta), -sin(ktheta));
    sum = sum + j_at(zl) * rot;
  }
  mpq_class scale = 1 / (mpq_class(m) * pow_q(h, k));
  CertifiedComplex a = sum * CertifiedReal::exact(scale, w);

  // Aliasing: the sum also picks up a_{k + s m} h^{s m}, s >= 1, and
  // |a_n| <= M / R^n with M the maximum of |j| on the disk of radius R.
  CertifiedReal y0 = z0.imag();
  CertifiedReal rb = CertifiedReal::exact(outer_radius, w);
  CertifiedReal big_m = max(envelope_f_at(y0 - rb), envelope_f_at(y0 + rb));
  CertifiedReal rho_m = pow(CertifiedReal::exact(h / outer_radius, w),
                            static_cast<unsigned>(m));
  CertifiedReal one = CertifiedReal::exact(1L, w);
  CertifiedReal alias = big_m / pow(rb, static_cast<unsigned>(k)) * rho_m / (one - rho_m);
  a.add_error(alias.abs_upper());
  return a;
}

EllipticConstants elliptic_constants_cauchy(long prec_bits) {
  // Samples on |z - z0| = 1/16 with aliasing controlled on |z - z0| = 1/4:
  // each sample point contributes a factor 4^-m to the aliasing bound.
  const int m = static_cast<int>(prec_bits / 2 + 24);
  const mpq_class h = make_q(1, 16);
  const mpq_class r = make_q(1, 4);
  return {taylor_coefficient_cauchy(zeta6_point(), 3, h, r, m, prec_bits),
          taylor_coefficient_cauchy(i_point(), 2, h, r, m, prec_bits)};
}

KappaLambda kappa_lambda(EllipticPoint p, const mpq_class& R, long prec_bits) {
  const long w = prec_bits + 16;
  EllipticConstants ec = elliptic_constants_gamma(w);
  CertifiedReal rb = CertifiedReal::exact(R, w);
  if (p == EllipticPoint::kZeta6) {
    if (!(R > 0) || !(R * R < make_q(3, 4))) {
      throw DomainError("kappa_lambda: need 0 < R < sqrt(3)/2 at zeta6");
    }
    CertifiedReal a = ec.abs_A0();
    CertifiedReal ym = surd_real(-R, make_q(1, 2), 3)(w);
    CertifiedReal yp = surd_real(R, make_q(1, 2), 3)(w);
    CertifiedReal kappa = a / rb + envelope_f_at(ym) / pow(rb, 4);
    CertifiedReal lambda = a * 3L / rb +
                           max(envelope_g_at(ym), envelope_g_at(yp)) / pow(rb, 3);
    return {kappa, lambda};
  }
  if (!(R > 0) || !(R < 1)) {
    throw DomainError("kappa_lambda: need 0 < R < 1 at i");
  }
  CertifiedReal a = ec.abs_A1();
  CertifiedReal ym = CertifiedReal::exact(1 - R, w);
  CertifiedReal yp = CertifiedReal::exact(1 + R, w);
  CertifiedReal kappa = a / rb + envelope_f_at(ym) / pow(rb, 3);
  CertifiedReal lambda = a * 2L / rb +
                         max(envelope_g_at(ym), envelope_g_at(yp)) / pow(rb, 2);
  return {kappa, lambda};
}

// ---------------------------------------------------------------------------
// Kuehne floor and global floors

CertifiedReal jprime_floor_kuehne_at(const CertifiedComplex& z) {
  const long w = z.prec();
  CertifiedComplex j = j_at(z);
  CertifiedComplex d = delta_product_at(z);
  CertifiedReal aj = abs(j);
  CertifiedReal second = cbrt(abs(d)) * cbrt(aj) * abs(j - 1728L);
  return two_pi(w) * min(aj, second);
}

CertifiedReal jprime_floor_kuehne(const Point& z, long prec_bits) {
  return jprime_floor_kuehne_at(z(prec_bits + 32));
}

GlobalFloorReport check_global_floors(const CertifiedComplex& z,
                                      const CertifiedReal& f_y,
                                      const CertifiedReal& g_y) {
  const long w = z.prec();
  GlobalFloorReport r;
  JValues jv = j_and_jprime_at(z);
  CertifiedReal aj = abs(jv.j);
  CertifiedReal aj1728 = abs(jv.j - 1728L);
  CertifiedReal ajp = abs(jv.jprime);

  CertifiedReal dz = min(abs(z - zeta6_point()(w)), abs(z - zeta3_point()(w)));
  CertifiedReal di = abs(z - i_point()(w));
  CertifiedReal th_z = CertifiedReal::exact(make_q(1, 1000), w);
  CertifiedReal th_i = CertifiedReal::exact(make_q(1, 100), w);
  // A region is "possible" unless the certified distance excludes it.
  bool near_z = !certainly_less(th_z, dz);
  bool far_z = !certainly_less(dz, th_z);
  bool near_i = !certainly_less(th_i, di);
  bool far_i = !certainly_less(di, th_i);

  auto ge = [](const CertifiedReal& lhs, const CertifiedReal& floor) {
    return certainly_less_equal(floor, lhs);
  };
  auto exact = [w](long n, long d) { return CertifiedReal::exact(make_q(n, d), w); };

  if (near_z) r.j_ok = r.j_ok && ge(aj, pow(dz, 3) * 30000L);
  if (far_z) r.j_ok = r.j_ok && ge(aj, exact(3, 100000));
  if (near_i) r.j1728_ok = r.j1728_ok && ge(aj1728, sqr(di) * 20000L);
  if (far_i) r.j1728_ok = r.j1728_ok && ge(aj1728, exact(2, 1));
  if (near_z) r.jprime_ok = r.jprime_ok && ge(ajp, sqr(dz) * 100000L);
  if (near_i) r.jprime_ok = r.jprime_ok && ge(ajp, di * 40000L);
  if (far_z && far_i) r.jprime_ok = r.jprime_ok && ge(ajp, exact(1, 10000));

  CertifiedReal d = abs(delta_product_at(z));
  CertifiedReal kuehne =
      two_pi(w) * min(aj, cbrt(d) * cbrt(aj) * aj1728);
  r.kuehne_ok = certainly_less_equal(kuehne, ajp);
  r.envelope_ok = certainly_less_equal(aj, f_y) && certainly_less_equal(ajp, g_y);

  if (near_z) r.branch += "near-zeta;";
  if (near_i) r.branch += "near-i;";
  if (far_z && far_i) r.branch += "far;";
  return r;
}

std::vector<GridPoint> fundamental_domain_grid(int n) {
  // An odd n would put a column of centres on Re z = 0.
  if (n % 2 != 0) ++n;
  std::vector<GridPoint> pts;
  const double y_lo = std::sqrt(3.0) / 2.0;
  const double y_hi = 2.0;
  for (int iy = 0; iy < n; ++iy) {
    double y = y_lo + (iy + 0.5) * (y_hi - y_lo) / n;
    for (int ix = 0; ix < n; ++ix) {
      double x = -0.5 + (ix + 0.5) / n;
      // Exact test of x^2 + y^2 >= 1 on the binary values.
      mpq_class xq(x), yq(y);
      if (xq * xq + yq * yq >= 1) pts.push_back({x, y});
    }
  }
  return pts;
}

GridFloorSummary verify_global_floors_grid(int n, long prec_bits, int workers) {
  std::vector<GridPoint> pts = fundamental_domain_grid(n);
  std::vector<GlobalFloorReport> reports(pts.size());
  parallel_for(pts.size(), workers, [&](std::size_t i) {
    const long w = prec_bits;
    CertifiedComplex z = dyadic_point(pts[i].re, pts[i].im)(w);
    CertifiedReal y = CertifiedReal::from_double(pts[i].im, w);
    reports[i] = check_global_floors(z, envelope_f_at(y), envelope_g_at(y));
  });
  GridFloorSummary s;
  s.points = static_cast<long>(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& r = reports[i];
    if (r.branch.find("near-zeta") != std::string::npos) ++s.near_zeta;
    if (r.branch.find("near-i") != std::string::npos) ++s.near_i;
    if (r.branch.find("far") != std::string::npos) ++s.far;
    if (!r.passed()) {
      ++s.failures;
      s.failed.push_back(pts[i]);
    }
  }
  return s;
}

}  // namespace moduli
