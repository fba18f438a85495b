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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfn/gate_ir.hpp"

namespace qfn {

class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

class ContractViolation : public std::runtime_error {
 public:
  explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

// One classical bit per qubit.  Bit 0 of a register value is its first
// (least significant) qubit.
class BasisState {
 public:
  explicit BasisState(std::size_t qubit_count);

  std::size_t qubit_count() const { return n_; }
  bool get(QubitId q) const { return (words_[q >> 6] >> (q & 63)) & 1; }
  void set(QubitId q, bool v) {
    std::uint64_t m = 1ULL << (q & 63);
    if (v)
      words_[q >> 6] |= m;
    else
      words_[q >> 6] &= ~m;
  }
  void flip(QubitId q) { words_[q >> 6] ^= 1ULL << (q & 63); }

  std::uint64_t read(const std::vector<QubitId>& reg) const;
  void write(const std::vector<QubitId>& reg, std::uint64_t value);

  const std::vector<std::uint64_t>& words() const { return words_; }
  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

// Exact classical reversible execution of a gate-only circuit.  Phase gates
// raise SimError; relabels permute the register layout, not the bits.
BasisState run_basis(const Circuit& c, const BasisState& input);

// Precompiled form for sweeps over many inputs (single-word states only).
class CompiledBasisCircuit {
 public:
  explicit CompiledBasisCircuit(const Circuit& c);

  std::uint64_t run(std::uint64_t input) const;
  std::size_t qubit_count() const { return n_; }

 private:
  struct CompiledGate {
    std::uint64_t ctrl_mask;
    std::uint64_t ctrl_value;
    std::uint64_t target_mask;
  };
  std::size_t n_;
  std::vector<CompiledGate> gates_;
};

// Declared register predicates, attached by the arithmetic builders so that
// precondition violations (b >= N, dirty scratch) can be flagged on demand.
struct RegisterPredicate {
  enum class Kind : std::uint8_t { Zero, LessThan } kind = Kind::Zero;
  std::string reg;
  std::uint64_t bound = 0;  // LessThan only

  std::string describe() const;
};

struct Network {
  Circuit circuit;
  std::vector<RegisterPredicate> preconditions;
};

void check_contracts(const Network& net, const BasisState& input);

// run_basis with opt-in contract checking against the declared predicates.
BasisState run_basis(const Network& net, const BasisState& input, bool contract_checks);

// ---- State-vector simulation (FT-bearing circuits) ----

inline constexpr std::size_t kMaxStateVectorQubits = 26;

class StateVector {
 public:
  explicit StateVector(std::size_t qubit_count);
  static StateVector basis(std::size_t qubit_count, std::uint64_t index);

  std::size_t qubit_count() const { return n_; }
  std::vector<std::complex<double>>& amplitudes() { return amps_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  double norm_sq() const;

 private:
  std::size_t n_;
  std::vector<std::complex<double>> amps_;
};

// Applies every instruction as its unitary.  The norm is checked after each
// instruction to 1e-12.
StateVector run_statevector(const Circuit& c, StateVector psi);

struct MeasurementDistribution {
  std::vector<double> probabilities;  // indexed by register bit pattern

  double total() const;
};

MeasurementDistribution distribution(const StateVector& psi, const std::vector<QubitId>& reg);
MeasurementDistribution distribution(const StateVector& psi, const Circuit& c,
                                     const std::string& reg_name);

std::uint64_t sample(const MeasurementDistribution& d, std::uint64_t seed);
std::vector<std::uint64_t> sample_many(const MeasurementDistribution& d, std::size_t count,
                                       std::uint64_t seed);

// ---- Fourier transform networks ----

// In-place FT over L qubits: L rotations and L(L-1)/2 conditional phases,
// output bit order reversed.  The Tilde variant uses determinant-one
// rotations; it changes amplitude signs but not any measured distribution.
// prune_drops_below: omit conditional phases with |theta| < that angle.
Circuit build_qft(std::size_t L, RotationKind variant = RotationKind::Hat,
                  std::optional<double> prune_drops_below = std::nullopt);

// L rotations putting a zeroed register into the uniform superposition.
Circuit prepare_uniform(std::size_t L);

// Analytic reference distribution for measuring the FT of a periodic
// function's preimage state: support size N_k = #{j >= 0 : k + r*j < 2^L}.
MeasurementDistribution ft_reference_prob(std::size_t L, std::uint64_t r, std::uint64_t offset_k);

}  // namespace qfn
