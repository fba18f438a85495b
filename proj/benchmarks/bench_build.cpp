// Copyright 2026 The qfn developers
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

#include "qfn/arith_networks.hpp"
#include "qfn/minimal_space.hpp"

namespace {

void BM_BuildExpn(benchmark::State& state) {
  unsigned K = static_cast<unsigned>(state.range(0));
  qfn::ModulusContext ctx((1ULL << (K - 1)) | 1, K, 2);
  for (auto _ : state) {
    auto net = qfn::build_expn(2, ctx, 2 * K, qfn::NetworkConfig{});
    benchmark::DoNotOptimize(net.circuit.ops().size());
  }
}
BENCHMARK(BM_BuildExpn)->Arg(4)->Arg(6)->Arg(8);

void BM_CountExpn(benchmark::State& state) {
  unsigned K = static_cast<unsigned>(state.range(0));
  qfn::ModulusContext ctx((1ULL << (K - 1)) | 1, K, 2);
  for (auto _ : state) {
    auto counts = qfn::count_expn(2, ctx, 2 * K, qfn::NetworkConfig{});
    benchmark::DoNotOptimize(counts.max_arity());
  }
}
BENCHMARK(BM_CountExpn)->Arg(8)->Arg(16)->Arg(32);

void BM_CountExpnMin(benchmark::State& state) {
  unsigned K = static_cast<unsigned>(state.range(0));
  qfn::ModulusContext ctx((1ULL << (K - 1)) | 1, K, 2);
  for (auto _ : state) {
    auto counts = qfn::count_expn_min(2, ctx, 2 * K);
    benchmark::DoNotOptimize(counts.max_arity());
  }
}
BENCHMARK(BM_CountExpnMin)->Arg(4)->Arg(8);

}  // namespace
