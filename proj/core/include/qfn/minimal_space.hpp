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

#include "qfn/arith_networks.hpp"

namespace qfn {

// Minimal-space constructions: addition works left to right, flipping the
// highest sum bit first, so no scratch register is needed at all.  The
// price is controlled^K-NOT gates, so these circuits assume the
// unrestricted machine; pulses still follow the 2k+3 rule.

// (carry, beta) <- b + E&a as a (K+1)-bit sum; carry must be preset 0.
Circuit build_add_ltr(std::uint64_t a, unsigned K, std::size_t n_enables);

// In-place multiplexed add mod 2^K: beta += (a' if select else a).
// The select line doubles as the enclosing adder's overflow qubit.
Circuit build_madd_prime(std::uint64_t a, std::uint64_t a_prime, unsigned K,
                         std::size_t n_enables = 0);

// Overwriting mod N add with a single scratch qubit:
//   beta <- b + E&a (mod N), carry returns to 0.
Network build_oaddn_min(std::uint64_t a, const ModulusContext& ctx, std::size_t n_enables);

// beta <- x^a mod N with K+1 qubits of scratch (gamma plus the carry).
Network build_expn_min(std::uint64_t x, const ModulusContext& ctx, unsigned L);

CostVector count_expn_min(std::uint64_t x, const ModulusContext& ctx, unsigned L);

}  // namespace qfn
