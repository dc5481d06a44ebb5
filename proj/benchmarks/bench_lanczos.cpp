// Copyright 2026 The ldechain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "ldechain/eigensolver.hpp"

namespace {

void BM_GroundStateDimer(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  auto basis = lde::make_sector(lde::SiteKind::SpinHalf, length, 0);
  const auto bonds = lde::build_dimer_frustrated({length, 0.5, 0.5});
  lde::LanczosOptions opts;
  opts.spin_flip_parity = lde::singlet_flip_parity(lde::SiteKind::SpinHalf, length);
  int iterations = 0;
  for (auto _ : state) {
    const auto g = lde::lowest_eigenpairs(bonds, basis, 1, 7, opts);
    iterations = g.iterations;
    benchmark::DoNotOptimize(g.eigenvalues.front());
  }
  state.counters["matvecs"] = iterations;
}
BENCHMARK(BM_GroundStateDimer)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_GroundStateAklt(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  auto basis = lde::make_sector(lde::SiteKind::SpinOne, length, 0);
  const auto bonds = lde::build_blbq({length, 1.0 / 3.0});
  lde::LanczosOptions opts;
  opts.spin_flip_parity = 1;
  int iterations = 0;
  for (auto _ : state) {
    const auto g = lde::lowest_eigenpairs(bonds, basis, 1, 7, opts);
    iterations = g.iterations;
    benchmark::DoNotOptimize(g.eigenvalues.front());
  }
  state.counters["matvecs"] = iterations;
}
BENCHMARK(BM_GroundStateAklt)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
