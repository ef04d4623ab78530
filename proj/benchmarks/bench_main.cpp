// Copyright 2026 The qnumrange Authors.
//
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

#include "qnr/essential.hpp"
#include "qnr/lancaster.hpp"
#include "qnr/numerical_range.hpp"
#include "qnr/random.hpp"
#include "qnr/spectrum.hpp"

namespace {

using namespace qnr;

QMatrix seeded_matrix(std::size_t n) {
  Rng rng = make_rng(7, "bench", n);
  return random_matrix(n, rng);
}

void BM_Product(benchmark::State& state) {
  Rng rng = make_rng(1, "product");
  const Quaternion p = random_unit(rng);
  Quaternion q = random_unit(rng);
  for (auto _ : state) {
    q = p * q;
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_Product);

void BM_NrSample(benchmark::State& state) {
  const QMatrix t = seeded_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nr_sample(t, 10000, 1));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_NrSample)->Arg(2)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Support(benchmark::State& state) {
  const QMatrix t = seeded_matrix(static_cast<std::size_t>(state.range(0)));
  double theta = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(upper_bild_support(t, theta));
    theta = theta + 0.01 > 3.14 ? 0.0 : theta + 0.01;
  }
}
BENCHMARK(BM_Support)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_UpperBild(benchmark::State& state) {
  const QMatrix t = seeded_matrix(static_cast<std::size_t>(state.range(0)));
  BildOptions o;
  o.samples = 20000;
  for (auto _ : state) benchmark::DoNotOptimize(upper_bild(t, o));
}
BENCHMARK(BM_UpperBild)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SSpectrum(benchmark::State& state) {
  const QMatrix t = seeded_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(s_spectrum(t));
}
BENCHMARK(BM_SSpectrum)->Arg(2)->Arg(5)->Arg(16)->Unit(benchmark::kMicrosecond);

ModelOperator segment_example() {
  return ModelOperator(QMatrix::diagonal({Quaternion{-1, 1, 0, 0}, Quaternion{1, 1, 0, 0}}),
                       TailSymbol::rationals(0.5), {LimitEntry::segment(0.0, 0.0, 0.5)}, 1.5);
}

void BM_Combination(benchmark::State& state) {
  const ModelOperator m = segment_example();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        convex_combination_sequence(m, Quaternion{0, 0.5, 0, 0}, Quaternion{0, 0, -0.5, 0}, 0.6, depth));
  }
}
BENCHMARK(BM_Combination)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Lancaster(benchmark::State& state) {
  const ModelOperator m = segment_example();
  LancasterOptions o;
  o.sections = {static_cast<std::size_t>(state.range(0))};
  o.bild.samples = 20000;
  for (auto _ : state) benchmark::DoNotOptimize(lancaster_check(m, o));
}
BENCHMARK(BM_Lancaster)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
