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
#include "qfn/rational.hpp"

namespace qfn {

// Gate sets.  The basic machine hard-wires controlled^k-NOT for k <= 2, the
// enhanced machine adds k = 3 and k = 4.  Unrestricted places no cap and is
// used by the minimal-space networks, which need controlled^K-NOTs.
enum class MachineKind : std::uint8_t { Basic, Enhanced, Unrestricted };

struct MachineModel {
  MachineKind kind = MachineKind::Basic;

  std::size_t max_control_arity() const {
    switch (kind) {
      case MachineKind::Basic:
        return 2;
      case MachineKind::Enhanced:
        return 4;
      case MachineKind::Unrestricted:
        return SIZE_MAX;
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case MachineKind::Basic:
        return "basic";
      case MachineKind::Enhanced:
        return "enhanced";
      case MachineKind::Unrestricted:
        return "unrestricted";
    }
    return "?";
  }
};

inline constexpr MachineModel kBasicMachine{MachineKind::Basic};
inline constexpr MachineModel kEnhancedMachine{MachineKind::Enhanced};
inline constexpr MachineModel kUnrestrictedMachine{MachineKind::Unrestricted};

// Per-arity gate counts [c0, c1, c2, ...]: c_k controlled^k-NOTs.  Entries
// are exact rationals so that averaged tables stay exact.
class CostVector {
 public:
  CostVector() = default;
  explicit CostVector(std::vector<Rational> counts) : counts_(std::move(counts)) {}
  static CostVector of_integers(const std::vector<std::int64_t>& v);

  const std::vector<Rational>& counts() const { return counts_; }
  std::size_t max_arity() const { return counts_.empty() ? 0 : counts_.size() - 1; }
  Rational at(std::size_t arity) const;
  void add(std::size_t arity, const Rational& amount);

  CostVector& operator+=(const CostVector& o);
  friend CostVector operator+(CostVector a, const CostVector& b) { return a += b; }
  CostVector scaled(const Rational& f) const;

  // Worst-case aggregation is the entrywise max, average the entrywise mean.
  static CostVector entrywise_max(const std::vector<CostVector>& vs);
  static CostVector mean(const std::vector<CostVector>& vs);

  bool operator==(const CostVector& o) const;
  std::string str() const;

 private:
  std::vector<Rational> counts_;
};

// Laser pulses under the ion-trap scheme: 1 pulse for a NOT, 2k+3 pulses
// for a controlled^k-NOT (k >= 1).  Control polarity does not matter.
Rational pulses(const CostVector& v);

inline constexpr int kPulsesPerRotation = 1;
inline constexpr int kPulsesPerConditionalPhase = 4;

struct PhaseOpCount {
  std::size_t rotations = 0;
  std::size_t conditional_phases = 0;
};

CostVector count_gates(const Circuit& c);
PhaseOpCount count_phase_ops(const Circuit& c);

// Total pulse cost of a circuit including its phase ops; relabels are free.
Rational circuit_pulses(const Circuit& c);

struct GateSetViolation {
  std::size_t op_index = 0;
  std::size_t arity = 0;
};

// Empty result means every controlled^k-NOT fits the machine's gate set.
// Phase gates are always admitted; they sit outside the NOT-family budget.
std::vector<GateSetViolation> validate(const Circuit& c, const MachineModel& m);

}  // namespace qfn
