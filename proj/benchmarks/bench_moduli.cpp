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


#include <benchmark/benchmark.h>

#include "moduli/forms.hpp"
#include "moduli/jseries.hpp"
#include "moduli/modular.hpp"
#include "moduli/primel.hpp"
#include "moduli/separation.hpp"
#include "moduli/singular.hpp"

namespace {

using namespace moduli;

void BM_JCoefficients(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(j_coefficients(state.range(0)));
  }
}
BENCHMARK(BM_JCoefficients)->Arg(100)->Arg(1000);

// j at the dominant CM point of discriminant -163, relative precision.
void BM_EvalJ(benchmark::State& state) {
  const Point z = exact_point(make_q(1, 2), make_q(1, 2), 163);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_j(z, state.range(0)));
  }
}
BENCHMARK(BM_EvalJ)->Arg(64)->Arg(128)->Arg(512)->Arg(2048);

void BM_EvalJPrime(benchmark::State& state) {
  const Point z = exact_point(make_q(1, 4), make_q(1, 4), 71);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_j_and_prime(z, state.range(0)));
  }
}
BENCHMARK(BM_EvalJPrime)->Arg(128)->Arg(512);

void BM_ReducedForms(benchmark::State& state) {
  const auto d = validate_discriminant(-state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_forms(d));
  }
}
BENCHMARK(BM_ReducedForms)->Arg(1000)->Arg(100000)->Arg(1000003);

void BM_Hilbert(benchmark::State& state) {
  const auto d = validate_discriminant(-state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_class_polynomial(d));
  }
}
BENCHMARK(BM_Hilbert)->Arg(23)->Arg(719)->Arg(3299)->Unit(benchmark::kMillisecond);

void BM_ClosestPairBucketed(benchmark::State& state) {
  const auto pts = singular_moduli_up_to(state.range(0), 128, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closest_pair_bucketed(pts));
  }
  state.counters["points"] = static_cast<double>(pts.size());
}
BENCHMARK(BM_ClosestPairBucketed)->Arg(300)->Arg(3000)->Unit(benchmark::kMillisecond);

void BM_ClosestPairBrute(benchmark::State& state) {
  const auto pts = singular_moduli_up_to(state.range(0), 128, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closest_pair_brute(pts, PairMode::kAll));
  }
  state.counters["points"] = static_cast<double>(pts.size());
}
BENCHMARK(BM_ClosestPairBrute)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_SingularModuli(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(singular_moduli_up_to(state.range(0), 128, 1));
  }
}
BENCHMARK(BM_SingularModuli)->Arg(300)->Arg(3000)->Unit(benchmark::kMillisecond);

void BM_GaloisPolynomials(benchmark::State& state) {
  const auto dx = validate_discriminant(-480);
  const auto dy = validate_discriminant(-960);
  for (auto _ : state) {
    benchmark::DoNotOptimize(galois_polynomials(dx, dy));
  }
}
BENCHMARK(BM_GaloisPolynomials)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
