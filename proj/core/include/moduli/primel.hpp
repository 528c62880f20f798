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

// Finite checks behind the primitive element classification for x + alpha y
// with singular moduli x, y and rational alpha.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moduli/ball.hpp"
#include "moduli/forms.hpp"
#include "moduli/modular.hpp"
#include "moduli/polynomial.hpp"
#include "moduli/report.hpp"

namespace moduli {

// ---------------------------------------------------------------------------
// Discriminants with many dominant or subdominant conjugates.

inline constexpr long kBadSweepHorizon = 20000;

// Every D with |D| <= horizon such that h(D) in {4, 5, 6} and D = 1 (mod 8),
// or h(D) = 4 and D = 8, 12 (mod 16); by increasing |D|.
std::vector<Discriminant> bad_discriminants(long horizon = kBadSweepHorizon);

// Class group of exponent at most 2: every reduced form is ambiguous.
bool is_two_elementary(const Discriminant& d);

// Members of bad_discriminants() with h = 4 and class group [2, 2].
std::vector<Discriminant> two_elementary_subset(
    long horizon = kBadSweepHorizon);

// ---------------------------------------------------------------------------
// Ratio sets.

struct AlphaTriple {
  int i, j, k;  // 1-based conjugate indices
};

struct AlphaSet {
  Discriminant disc;
  std::vector<CertifiedComplex> elements;  // (x_1 - x_i) / (x_j - x_k)
  std::vector<AlphaTriple> triples;
};

// x_1 is the dominant modulus, x_2..x_h follow the order of reduced_forms;
// 2 <= i, j <= h and j < k <= h. Throws DegenerateDenominator if some
// x_j - x_k cannot be separated from zero below the precision cap.
AlphaSet alpha_set(const Discriminant& d, long prec_bits = 128,
                   const PrecisionPolicy& policy = {});

// Certified lower bound (as an enclosure of the minimum) of |Im z| over
// the set, with the index of an element attaining it.
struct MinImag {
  CertifiedReal value;
  size_t index = 0;
};
MinImag min_imag(const AlphaSet& a);

// ---------------------------------------------------------------------------
// Conjugates as polynomials in the dominant modulus.

// For a Galois field Q(x) = Q(y), x dominant of dx: polynomials g_m of
// degree < h(dx) with g_m(x) = y_m, the m-th modulus of dy in form order.
// Each g_m is certified exactly by H_dy(g_m) = 0 mod H_dx, pairwise
// distinctness and a certified numeric match g_m(x) ~ y_m.
// Throws ReconstructionFailed when no assignment certifies.
std::vector<RatPolynomial> galois_polynomials(const Discriminant& dx,
                                              const Discriminant& dy,
                                              const PrecisionPolicy& policy = {});

// f_1 = X, ..., f_h with f_i(x_1) = x_i.
std::vector<RatPolynomial> conjugate_polynomials(
    const Discriminant& d, const PrecisionPolicy& policy = {});

// The pairs (D_x, D_y) with Q(x) = Q(y) Galois, D_x != D_y and h >= 3.
const std::vector<std::pair<long, long>>& cross_pairs();
bool is_cross_pair(long dx, long dy);

// g_1..g_h for y conjugates in terms of the dominant x of dx. Throws
// NotInClassifiedList for pairs outside cross_pairs().
std::vector<RatPolynomial> cross_pair_polynomials(
    const Discriminant& dx, const Discriminant& dy,
    const PrecisionPolicy& policy = {});

// ---------------------------------------------------------------------------
// Non-proportionality.

struct Minor {
  int i = 0, j = 0, k = 0;  // the compared pair of differences
  long p = 0, q = 0;        // coefficient indices of the minor
  mpq_class value;          // u_p v_q - u_q v_p, nonzero when certified
};

struct Nonproportionality {
  bool holds = true;
  std::vector<Minor> minors;  // one per admissible (i, j, k)
  std::optional<AlphaTriple> counterexample;
};

// u and v are proportional when one is zero or all 2x2 minors vanish.
std::optional<Minor> nonzero_minor(const RatPolynomial& u,
                                   const RatPolynomial& v);

// f_1 - f_i against f_j - f_k for 2 <= i <= h, 2 <= j < k <= h.
Nonproportionality nonproportional(const std::vector<RatPolynomial>& fs);
// f_1 - f_i against g_j - g_k for 2 <= i <= h, 1 <= j < k <= h.
Nonproportionality nonproportional(const std::vector<RatPolynomial>& fs,
                                   const std::vector<RatPolynomial>& gs);

// ---------------------------------------------------------------------------
// Classification.

struct PrimitiveVerdict {
  enum class Tag {
    kGenerates,
    kExceptionExampleQuad,
    kTrivialEqual,
    kSumDiffCase,
    kOutOfClassification,
  };
  Tag tag = Tag::kGenerates;
  // The exceptional alpha for kExceptionExampleQuad.
  std::optional<mpq_class> alpha;
  // Upper bound on [Q(x, y) : Q(x + alpha y)] for kSumDiffCase.
  int subfield_index = 0;
  std::string reason;
};
const char* to_string(PrimitiveVerdict::Tag t);

// Both class numbers 2, equal quadratic fields, and then alpha of the
// quadratic example with x, y the conjugates of larger real part and
// x', y' the others: -(x - x') / (y - y'). For dx = dy this pairs y = x'
// and gives 1. nullopt when the pattern does not apply.
std::optional<mpq_class> example_quad_alpha(const Discriminant& dx,
                                            const Discriminant& dy);

PrimitiveVerdict classify_primitive(const Discriminant& dx,
                                    const Discriminant& dy,
                                    const mpq_class& alpha);

// Certified check that x + alpha y equals x' + alpha y' for the exceptional
// alpha (either sign), x, y of larger real part.
bool exception_collides(const Discriminant& dx, const Discriminant& dy,
                        const mpq_class& alpha, long prec_bits = 128);

// Certified sufficient condition for Q(x + alpha y) = Q(x, y), x dominant:
// x + alpha y_b differs from every x_i + alpha y_k, (i, k) != (1, b), for
// each b. Escalates on undecided comparisons.
bool certify_generates(const Discriminant& dx, const Discriminant& dy,
                       const mpq_class& alpha, long prec_bits = 128,
                       const PrecisionPolicy& policy = {});

// ---------------------------------------------------------------------------
// Reports.

CheckReport verify_bad_list(long horizon = kBadSweepHorizon);
CheckReport verify_alpha_sets(long prec_bits = 128, int workers = 0,
                              const PrecisionPolicy& policy = {});
CheckReport verify_two_elementary_polynomials(
    int workers = 0, const PrecisionPolicy& policy = {});
// All classified pairs when `pairs` is empty; throws NotInClassifiedList for
// a pair outside the list.
CheckReport verify_cross_pairs(
    int workers = 0, const std::vector<std::pair<long, long>>& pairs = {},
    const PrecisionPolicy& policy = {});

}  // namespace moduli
