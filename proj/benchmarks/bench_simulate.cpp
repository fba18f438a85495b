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
#include "qfn/simulator.hpp"

namespace {

void BM_BasisSweep(benchmark::State& state) {
  unsigned K = static_cast<unsigned>(state.range(0));
  qfn::ModulusContext ctx((1ULL << (K - 1)) | 1, K, 2);
  auto net = qfn::build_expn(2, ctx, 2 * K, qfn::NetworkConfig{});
  qfn::CompiledBasisCircuit compiled(net.circuit);
  std::uint64_t a = 0;
  for (auto _ : state) {
    qfn::BasisState in(net.circuit.qubit_count());
    in.write(net.circuit.reg("alpha"), a++ & ((1ULL << (2 * K)) - 1));
    benchmark::DoNotOptimize(compiled.run(in.words()[0]));
  }
}
BENCHMARK(BM_BasisSweep)->Arg(4)->Arg(6)->Arg(8);

void BM_StateVectorQft(benchmark::State& state) {
  unsigned L = static_cast<unsigned>(state.range(0));
  qfn::Circuit qft = qfn::build_qft(L);
  for (auto _ : state) {
    auto psi = qfn::run_statevector(qft, qfn::StateVector(L));
    benchmark::DoNotOptimize(psi.amplitudes()[0]);
  }
}
BENCHMARK(BM_StateVectorQft)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
