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

#include "moduli/jseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "moduli/errors.hpp"

namespace moduli {

namespace {

using Series = std::vector<mpz_class>;

// Product truncated to the length of a.
Series series_mul(const Series& a, const Series& b) {
  const size_t m = a.size();
  Series r(m);
  for (size_t i = 0; i < m; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t k = 0; i + k < m; ++k) {
      mpz_addmul(r[i + k].get_mpz_t(), a[i].get_mpz_t(), b[k].get_mpz_t());
    }
  }
  return r;
}

// prod_{n>=1} (1 - q^n) by Euler's pentagonal number theorem.
Series euler_product(size_t m) {
  Series e(m);
  e[0] = 1;
  for (long k = 1;; ++k) {
    long p1 = k * (3 * k - 1) / 2;
    long p2 = k * (3 * k + 1) / 2;
    if (static_cast<size_t>(p1) >= m) break;
    int sign = (k % 2 == 0) ? 1 : -1;
    e[p1] += sign;
    if (static_cast<size_t>(p2) < m) e[p2] += sign;
  }
  return e;
}

// q j(q) = E4^3 / prod (1 - q^n)^24 to m terms: entry i is c_{i-1}.
Series qj_series(size_t m) {
  Series e4(m);
  Series s3 = divisor_sigma_table(static_cast<long>(m) - 1, 3);
  e4[0] = 1;
  for (size_t n = 1; n < m; ++n) e4[n] = 240 * s3[n];
  Series num = series_mul(series_mul(e4, e4), e4);

  Series e1 = euler_product(m);
  Series e2 = series_mul(e1, e1);
  Series e4p = series_mul(e2, e2);
  Series e8 = series_mul(e4p, e4p);
  Series e16 = series_mul(e8, e8);
  Series den = series_mul(e16, e8);  // leading coefficient 1

  Series out(m);
  for (size_t i = 0; i < m; ++i) {
    mpz_class acc = num[i];
    for (size_t k = 1; k <= i; ++k) {
      mpz_submul(acc.get_mpz_t(), den[k].get_mpz_t(), out[i - k].get_mpz_t());
    }
    out[i] = acc;
  }
  return out;
}

std::mutex g_table_mutex;
std::shared_ptr<const JCoefficientTable> g_table;

}  // namespace

std::vector<mpz_class> divisor_sigma_table(long N, unsigned k) {
  std::vector<mpz_class> s(static_cast<size_t>(std::max(N, 0L)) + 1);
  for (long d = 1; d <= N; ++d) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), k);
    for (long n = d; n <= N; n += d) s[n] += p;
  }
  return s;
}

std::vector<mpz_class> j_coefficients(long N) {
  if (N < 0) throw DomainError("j_coefficients: N must be nonnegative");
  return qj_series(static_cast<size_t>(N) + 2);
}

std::shared_ptr<const JCoefficientTable> j_coefficient_table(long N) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  if (g_table && g_table->size() > N) return g_table;
  long old = g_table ? g_table->size() : 0;
  long want = std::max({N + 1, 2 * old, 128L});
  Series qj = qj_series(static_cast<size_t>(want) + 1);
  auto t = std::make_shared<JCoefficientTable>();
  t->c.assign(qj.begin() + 1, qj.end());
  t->nc.resize(t->c.size());
  t->n2c.resize(t->c.size());
  for (size_t n = 0; n < t->c.size(); ++n) {
    t->nc[n] = t->c[n] * static_cast<unsigned long>(n);
    t->n2c[n] = t->nc[n] * static_cast<unsigned long>(n);
  }
  g_table = std::move(t);
  return g_table;
}

double tail_log2(long N, int k, double beta, double log2_a, double t) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (!(t > 0.0)) return -kInf;
  const double n1 = static_cast<double>(N + 1);
  // Ratio of consecutive term bounds for n >= N + 1; sqrt(n+1) - sqrt(n)
  // <= 1 / (2 sqrt(n)).
  double rho = std::pow(1.0 + 1.0 / n1, k) * std::exp(beta / (2.0 * std::sqrt(n1))) * t;
  rho *= 1.0 + 1e-12;
  if (rho >= 1.0) return kInf;
  double first = log2_a + k * std::log2(n1) + beta * std::sqrt(n1) / std::log(2.0) +
                 n1 * std::log2(t);
  double l = first - std::log2(1.0 - rho);
  // Slack for the double-precision evaluation of the bound itself.
  return l + 1e-9 * std::fabs(l) + 0.01;
}

long truncation_for(int k, double beta, double log2_a, double t,
                    double target_log2, long n_min) {
  for (long n = std::max(n_min, 0L); n < 10000000; ++n) {
    if (tail_log2(n, k, beta, log2_a, t) <= target_log2) return n;
  }
  throw DomainError("truncation_for: series does not converge for this |q|");
}

JSeriesContext::JSeriesContext(long prec_bits, double t_upper, int k,
                               double target_log2)
    : n_(truncation_for(k, kJCoeffBeta, 0.0, t_upper, target_log2)),
      prec_(prec_bits) {
  table_ = j_coefficient_table(n_);
  tail_log2_ = moduli::tail_log2(n_, k, kJCoeffBeta, 0.0, t_upper);
}

}  // namespace moduli
