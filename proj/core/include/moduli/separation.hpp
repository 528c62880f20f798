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

// Separation bounds between distinct singular moduli and their exhaustive
// verification over bounded discriminants.

#pragma once

#include <array>
#include <vector>

#include "moduli/ball.hpp"
#include "moduli/forms.hpp"
#include "moduli/modular.hpp"
#include "moduli/report.hpp"

namespace moduli {

// min{800 |Dy|^-4, 20000 |Dx|^-1 |Dy|^-3, 700 |Dx|^-3} with |Dx| >= |Dy|.
struct SeparationBound {
  mpq_class value;
  int branch = 1;  // 1, 2 or 3: the first term attaining the minimum
  long dx = 0;     // larger |D|
  long dy = 0;     // smaller |D|
};
SeparationBound separation_bound(const Discriminant& a, const Discriminant& b);
// 800 max{|Dx|, |Dy|}^-4.
mpq_class weak_bound(const Discriminant& a, const Discriminant& b);

// All discriminants -X <= D <= -3, by increasing |D|.
std::vector<Discriminant> discriminants_up_to(long X);

struct ModulusPoint {
  ReducedForm form;
  CertifiedComplex value;
};

// Every singular modulus with |D| <= X, ordered by (|D|, a, b), each with
// absolute radius about 2^-prec_bits.
std::vector<ModulusPoint> singular_moduli_up_to(long X, long prec_bits,
                                                int workers,
                                                const PrecisionPolicy& policy = {});

enum class PairMode { kAll, kEqualDiscriminant };
const char* to_string(PairMode m);

// Deterministic witness order: (|Dx|, ax, bx, |Dy|, ay, by).
bool witness_less(const ReducedForm& x1, const ReducedForm& y1,
                  const ReducedForm& x2, const ReducedForm& y2);

struct ClosestPair {
  long x = -1;  // indices into the point list, x before y in witness order
  long y = -1;
  CertifiedReal distance;  // enclosure of |x - y| for the witness
  double lower = 0.0;      // certified lower bound of the minimum
  double upper = 0.0;      // certified upper bound of the minimum
  long compared = 0;       // number of certified distance evaluations
};

// Grid bucketing over power-of-two cells, inserting points in a fixed-seed
// random order and shrinking the cell when the best distance halves.
ClosestPair closest_pair_bucketed(const std::vector<ModulusPoint>& pts);
ClosestPair closest_pair_brute(const std::vector<ModulusPoint>& pts,
                               PairMode mode = PairMode::kAll);

CheckReport min_pairwise_distance(long X, PairMode mode, long prec_bits = 128,
                                  int workers = 0,
                                  const PrecisionPolicy& policy = {});

struct Table1Entry {
  int k;
  long X;
  mpq_class d;
  mpq_class d_prime;
};
const std::array<Table1Entry, 4>& table1();

// Both minima for one row; passes when min >= d_k and min' >= d'_k. A
// witness above 1.05 d_k is reported as a warning, not a failure.
CheckReport verify_table1_row(const Table1Entry& e, long prec_bits = 128,
                              int workers = 0,
                              const PrecisionPolicy& policy = {});

// Every distinct pair with |D| <= X satisfies |x - y| >= scale * bound and
// |x - y| >= scale * weak_bound. scale > 1 is a negative control.
CheckReport verify_separation_theorem(long X, long prec_bits = 128,
                                      int workers = 0,
                                      const mpq_class& scale = 1,
                                      const PrecisionPolicy& policy = {});

// The five lower bounds at CM points tau != i, zeta6 with |D| <= X; the
// j' floor alone is checked further up to jprime_X when jprime_X > X.
CheckReport verify_cderiv(long X, long prec_bits = 128, int workers = 0,
                          long jprime_X = 0,
                          const PrecisionPolicy& policy = {});

}  // namespace moduli
