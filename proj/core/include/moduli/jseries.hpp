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

// Exact q-expansion coefficients of j and rigorous truncation bounds.
//
//   j(z) = 1/q + 744 + 196884 q + 21493760 q^2 + ...,   q = exp(2 pi i z).

#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

namespace moduli {

// c_{-1}, c_0, ..., c_N (so the result has N + 2 entries).
std::vector<mpz_class> j_coefficients(long N);

// Coefficients c_0..c_M together with n c_n and n^2 c_n, shared read-only.
struct JCoefficientTable {
  std::vector<mpz_class> c;
  std::vector<mpz_class> nc;
  std::vector<mpz_class> n2c;
  long size() const { return static_cast<long>(c.size()); }
};

// Thread-safe cache; the returned table holds at least c_0..c_N.
std::shared_ptr<const JCoefficientTable> j_coefficient_table(long N);

// sigma_k(n) for n = 0..N (sigma_k(0) = 0).
std::vector<mpz_class> divisor_sigma_table(long N, unsigned k);

// Upper bound, as log2, for sum_{n > N} A n^k exp(beta sqrt(n)) t^n, where
// t is an upper bound for |q|. Returns +inf when the geometric domination
// does not hold yet at this N. log2_a is log2(A).
double tail_log2(long N, int k, double beta, double log2_a, double t);

// Smallest N >= n_min with tail_log2(N, ...) <= target_log2.
long truncation_for(int k, double beta, double log2_a, double t,
                    double target_log2, long n_min = 1);

// Growth constant in c_n < exp(4 pi sqrt(n)), n >= 1.
inline constexpr double kJCoeffBeta = 12.5663706143592;  // 4 pi, rounded up

// Immutable evaluation context: coefficient snapshot, truncation index and
// the precision it was built for.
class JSeriesContext {
 public:
  // t_upper: upper bound for |q|; k: power of n weighting the coefficients
  // (0 for j, 1 for j', 2 for g').
  JSeriesContext(long prec_bits, double t_upper, int k, double target_log2);

  const JCoefficientTable& table() const { return *table_; }
  long truncation() const { return n_; }
  long prec_bits() const { return prec_; }
  // log2 of the certified tail bound for the chosen truncation.
  double tail_log2() const { return tail_log2_; }

 private:
  std::shared_ptr<const JCoefficientTable> table_;
  long n_;
  long prec_;
  double tail_log2_;
};

}  // namespace moduli
