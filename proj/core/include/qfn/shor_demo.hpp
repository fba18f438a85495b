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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qfn/arith_networks.hpp"
#include "qfn/minimal_space.hpp"
#include "qfn/simulator.hpp"

namespace qfn {

// x^a mod 15 for the two relevant exponent bits; every unit mod 15 has
// order dividing 4, so two bits of a suffice.
struct LookupTable15 {
  std::uint64_t base = 0;
  std::array<std::uint8_t, 4> rows{};  // rows[a] = x^a mod 15

  static LookupTable15 for_base(std::uint64_t x);
};

// Special-purpose N = 15 circuits that reproduce the lookup table with a
// handful of gates.  Standard preserves the input register; DropFinalNot
// leaves one input bit flipped and CustomGates uses negated-control gates,
// both preserving the input<->output correlation of the entangled state.
enum class Expn15Style : std::uint8_t { Standard, DropFinalNot, CustomGates };

Circuit build_expn15(std::uint64_t x, Expn15Style style, unsigned L = 2);

// a mod 2^K into a K-qubit output register: K controlled-NOTs.
Circuit build_mod2k(unsigned L, unsigned K);

// ---- Classical postprocessing ----

struct OrderResult {
  bool success = false;
  std::uint64_t numerator = 0;
  std::uint64_t candidate_r = 0;
};

// Closest rational to y/2^L with denominator < bound, by the convergents
// of the continued fraction; the last in-bound convergent wins.
OrderResult extract_order(std::uint64_t y, unsigned L, std::uint64_t bound);

struct FactorResult {
  bool success = false;
  std::uint64_t f1 = 0;
  std::uint64_t f2 = 0;
  std::string reason;  // set on failure
};

// gcd(x^(r/2) +- 1, N) when r is even and x^(r/2) != -1 (mod N).
FactorResult factor_from_order(std::uint64_t x, std::uint64_t r, std::uint64_t N);

// ---- End-to-end factoring experiment ----

struct ExperimentOptions {
  enum class Expn : std::uint8_t { Lookup15, General, MinSpace } expn = Expn::Lookup15;
  Expn15Style lookup_style = Expn15Style::Standard;
  NetworkConfig cfg;        // for Expn::General
  unsigned L = 2;           // input-register width (also the FT width)
  std::size_t trials = 1;
  std::uint64_t seed = 0;
};

struct ExperimentTrial {
  std::uint64_t y = 0;  // measured value, bit order already restored
  bool order_found = false;
  std::uint64_t candidate_r = 0;
  bool success = false;
  std::uint64_t f1 = 0, f2 = 0;
  std::string note;
};

struct ExperimentReport {
  std::uint64_t N = 0, x = 0;
  unsigned L = 0;
  std::uint64_t seed = 0;
  MeasurementDistribution y_distribution;  // over y, exact from the state
  std::vector<ExperimentTrial> trials;
  std::size_t successes = 0;
  Rational circuit_pulses{0};
};

// Prepares the uniform input, applies the modular-exponential circuit and
// the FT, then samples y per trial and runs order extraction, verification
// (x^r = 1 mod N) and factor extraction.  y = 0 counts as a failure.
ExperimentReport run_factoring_experiment(std::uint64_t N, std::uint64_t x,
                                          const ExperimentOptions& opts);

// ---- FT demonstration circuit (a mod 2^K feeding the FT) ----

struct QftTestReport {
  unsigned L = 0, K = 0;
  Rational total_pulses{0};
  MeasurementDistribution y_distribution;  // bit order restored
};

QftTestReport run_qft_test(unsigned L, unsigned K);

}  // namespace qfn
