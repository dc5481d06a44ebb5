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

#include "ldechain/model.hpp"

namespace {

void BM_SectorEnumeration(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto basis = lde::make_sector(lde::SiteKind::SpinHalf, length, 0);
    benchmark::DoNotOptimize(basis->size());
  }
}
BENCHMARK(BM_SectorEnumeration)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ApplyDimer(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  auto basis = lde::make_sector(lde::SiteKind::SpinHalf, length, 0);
  lde::HamiltonianOperator h(lde::build_dimer_frustrated({length, 0.3, 0.5}), basis);
  const Eigen::VectorXd in = lde::random_unit_vector(basis->size(), 1);
  Eigen::VectorXd out(in.size());
  for (auto _ : state) {
    h.apply(std::span<const double>(in.data(), basis->size()), std::span<double>(out.data(), basis->size()));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(basis->size()));
}
BENCHMARK(BM_ApplyDimer)->Arg(16)->Arg(20)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_ApplyBlbq(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  auto basis = lde::make_sector(lde::SiteKind::SpinOne, length, 0);
  lde::HamiltonianOperator h(lde::build_blbq({length, 0.0}), basis);
  const Eigen::VectorXd in = lde::random_unit_vector(basis->size(), 1);
  Eigen::VectorXd out(in.size());
  for (auto _ : state) {
    h.apply(std::span<const double>(in.data(), basis->size()), std::span<double>(out.data(), basis->size()));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(basis->size()));
}
BENCHMARK(BM_ApplyBlbq)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace
