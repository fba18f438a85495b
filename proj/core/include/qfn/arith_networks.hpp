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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qfn/gate_ir.hpp"
#include "qfn/machine_model.hpp"
#include "qfn/simulator.hpp"

namespace qfn {

// Classical side of a modular-arithmetic network build: the K-bit modulus N
// and (for multiplication/exponentiation) the base x with gcd(x, N) = 1.
struct ModulusContext {
  std::uint64_t N = 0;
  unsigned K = 0;
  std::uint64_t x = 0;

  ModulusContext(std::uint64_t modulus, unsigned bits, std::uint64_t base = 0);
  void require_invertible_base() const;
};

// Scratch configurations.  The letter picks the machine (E = enhanced,
// B = basic, S = enhanced with extra comparison space), the rest the
// scratch width: 2K+1, 2K+2, 2K+3 or 3K+1 qubits beyond input and result.
enum class Variant : std::uint8_t { E2K1, E2K2, B2K3, B2K2, B2K1, S3K1 };

MachineModel machine_for(Variant v);
unsigned scratch_width(Variant v, unsigned K);
std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct NetworkConfig {
  Variant variant = Variant::E2K1;
  bool first_mul_optimized = true;

  MachineModel machine() const { return machine_for(variant); }
};

// The five multiplexed-full-adder realizations.  Prime has no enable
// string; Plain adds the enables to the control strings (enhanced gates);
// DoublePrime trades one preset-0 scratch qubit for shorter controls;
// TriplePrime and QuadPrime expand the long gates with borrowed qubits so
// that only basic-machine gates remain.
enum class MuxfaForm : std::uint8_t { Prime, Plain, DoublePrime, TriplePrime, QuadPrime };

// ---- Primitive cells (standalone circuits over their own registers) ----

// Full adder for classical addend bit a: qubits (b, c, carry-out).
Circuit build_fa(int a);

// Multiplexed full adder: registers select, b, c, carry, enable[, tau].
Circuit build_muxfa(MuxfaForm form, int a0, int a1, std::size_t n_enables);

// Multiplexed half adder (no carry out): registers select, b, c, enable.
Circuit build_muxha(int a0, int a1, std::size_t n_enables);

// Multiplexed K-bit add mod 2^K: gamma <- b + E&(a' if sel else a).
Circuit build_madd(std::uint64_t a, std::uint64_t a_prime, unsigned K, std::size_t n_enables);

// Comparison sweep: result <- (b < a); mutates beta and fills ghat with
// junk, both repaired by the enclosing XLT.
Circuit build_lt(std::uint64_t a, unsigned K);

// target ^= E & (b < a); beta, copy line and ghat are restored.
Circuit build_xlt(std::uint64_t a, unsigned K, std::size_t n_enables);

// gamma <- b + E&a (mod N), select <- E&(a+b<N); beta preserved.
Network build_addn(std::uint64_t a, const ModulusContext& ctx, std::size_t n_enables);

// Overwriting mod N add: beta <- b + E&a (mod N) after the final relabel.
Network build_oaddn(std::uint64_t a, const ModulusContext& ctx, std::size_t n_enables);

// gamma <- E & (a * b0) for a single source qubit b0.
Circuit build_emul(std::uint64_t a, unsigned K, std::size_t n_enables);

// beta ^= alpha & E, bitwise.
Circuit build_xor(unsigned width, std::size_t n_enables);

// gamma <- E & (a*b mod N); beta preserved.  Single enable qubit.
Network build_muln(std::uint64_t a, const ModulusContext& ctx, const NetworkConfig& cfg);

// Overwriting mod N multiply; requires gcd(a, N) = 1.
Network build_omuln(std::uint64_t a, const ModulusContext& ctx, const NetworkConfig& cfg);

// beta <- x^a mod N over an L-qubit input register; scratch ends zeroed.
Network build_expn(std::uint64_t x, const ModulusContext& ctx, unsigned L,
                   const NetworkConfig& cfg);

// ---- Classical co-processor helpers ----

struct PrecomputedPowers {
  // (x^(2^i) mod N, x^(-2^i) mod N) for i < L; each pair multiplies to 1.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> powers;
};

PrecomputedPowers classical_precompute(std::uint64_t x, const ModulusContext& ctx, unsigned L);

// 2^j * a mod N for j < K, by repeated doubling.
std::vector<std::uint64_t> doubling_table(std::uint64_t a, const ModulusContext& ctx);

// ---- Counting without materializing (shared with cost_analysis) ----

// Builds the same instruction stream as build_expn but only tallies the
// per-arity gate counts; memory stays O(1) so K = 32 sizes are cheap.
CostVector count_expn(std::uint64_t x, const ModulusContext& ctx, unsigned L,
                      const NetworkConfig& cfg);

}  // namespace qfn
