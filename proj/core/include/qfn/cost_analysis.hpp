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
#include <optional>
#include <string>
#include <vector>

#include "qfn/arith_networks.hpp"
#include "qfn/machine_model.hpp"
#include "qfn/rational.hpp"

namespace qfn {

enum class CountCase : std::uint8_t { Worst, Average };

// The tabulated configurations: the six scratch variants plus the K+1
// minimal-space network.
enum class CostConfig : std::uint8_t { E2K1, E2K2, B2K3, B2K2, B2K1, S3K1, MinSpace };

CostConfig cost_config_for(Variant v);
std::string cost_config_name(CostConfig c);
CostConfig cost_config_from_name(const std::string& name);

struct FormulaResult {
  std::optional<CostVector> gate_vector;  // per-arity closed form when known
  Rational pulse_total;
  // Worst-case forms and the S3K1 average are leading-order only; the five
  // main average forms and the minimal-space pulse count are exact.
  bool leading_only = false;
};

FormulaResult formula_result(CostConfig config, CountCase cc, unsigned K, unsigned L);
Rational formula_pulses(CostConfig config, CountCase cc, unsigned K, unsigned L);

// Coefficient of L*K^2 in the gate vector and in the pulse total.
struct LeadingCoefficients {
  std::vector<std::int64_t> gates;
  std::int64_t pulses = 0;
};
LeadingCoefficients leading_coefficients(CostConfig config, CountCase cc);

// Closed forms for the minimal-space building blocks, averaged over
// uniform i.i.d. addend bits.  n_enables >= 1.
Rational add_ltr_avg_pulses(unsigned K, unsigned n_enables);
Rational madd_prime_avg_pulses(unsigned K, unsigned n_enables);
Rational oaddn_min_avg_pulses(unsigned K, unsigned n_enables);

// ---- Empirical averaging over random (N, x) ----

struct EmpiricalAverage {
  CostVector mean_counts;  // exact rationals (sum / trials)
  Rational mean_pulses;
  std::size_t trials = 0;
};

// Builds EXPN for `trials` random pairs (N odd and K bits wide, x coprime)
// and reports the mean per-arity counts; counting only, no simulation.
// Each trial draws from its own seed substream, so the result is identical
// for any worker count.
EmpiricalAverage empirical_average(CostConfig config, unsigned K, unsigned L, std::size_t trials,
                                   std::uint64_t seed, unsigned jobs = 1);

// ---- Primitive tables ----

struct PrimitiveCounts {
  std::string name;
  CostVector worst;
  CostVector average;
};

// Worst/average vectors for the five MUXFA forms, MUXHA with one and two
// enables, and LT at the given width, derived by enumerating the builders.
std::vector<PrimitiveCounts> primitive_count_table(unsigned K_for_lt);

}  // namespace qfn
