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
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qfn {

using QubitId = std::uint32_t;

enum class Polarity : std::uint8_t {
  Positive,  // control fires on |1>
  Negative,  // control fires on |0> ("custom gate" control)
};

struct ControlSpec {
  QubitId qubit = 0;
  Polarity polarity = Polarity::Positive;

  friend bool operator==(const ControlSpec&, const ControlSpec&) = default;
};

inline ControlSpec on(QubitId q) { return {q, Polarity::Positive}; }
inline ControlSpec off(QubitId q) { return {q, Polarity::Negative}; }

class CircuitError : public std::invalid_argument {
 public:
  explicit CircuitError(const std::string& what) : std::invalid_argument(what) {}
};

// A controlled^k-NOT.  k = controls.size() may be zero (a plain NOT).
// Controls must be pairwise distinct and distinct from the target; the
// constructor enforces this, so a validated Gate cannot alias qubits.
struct Gate {
  std::vector<ControlSpec> controls;
  QubitId target = 0;

  Gate(std::vector<ControlSpec> ctrls, QubitId tgt);

  std::size_t arity() const { return controls.size(); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class RotationKind : std::uint8_t {
  Hat,       // (|0>,|1>) basis mix with matrix [[1,1],[1,-1]]/sqrt(2)
  Tilde,     // determinant-one variant [[1,1],[-1,1]]/sqrt(2) (ket map)
  TildeInv,  // inverse of Tilde; produced by circuit inversion
};

// Exact dyadic angle theta = pi * num / den with den a power of two.
// Keeping angles exact makes serialization bit-exact and inversion lossless.
struct DyadicPhase {
  std::int64_t num = 0;
  std::uint64_t den = 1;

  DyadicPhase() = default;
  DyadicPhase(std::int64_t n, std::uint64_t d);

  double radians() const;

  friend bool operator==(const DyadicPhase&, const DyadicPhase&) = default;
};

struct PhaseGate {
  struct Rotation {
    RotationKind kind = RotationKind::Hat;
    QubitId qubit = 0;
    friend bool operator==(const Rotation&, const Rotation&) = default;
  };
  struct ConditionalPhase {
    QubitId a = 0;
    QubitId b = 0;  // distinct from a
    DyadicPhase theta;
    friend bool operator==(const ConditionalPhase&, const ConditionalPhase&) = default;
  };

  std::variant<Rotation, ConditionalPhase> op;

  static PhaseGate rotation(RotationKind kind, QubitId q) { return {Rotation{kind, q}}; }
  static PhaseGate conditional_phase(QubitId a, QubitId b, DyadicPhase theta);

  friend bool operator==(const PhaseGate&, const PhaseGate&) = default;
};

// Zero-cost register rename performed by the classical controller.  The
// instruction stays in the stream for traceability but moves no qubits.
struct Relabel {
  std::string reg_a;
  std::string reg_b;
  friend bool operator==(const Relabel&, const Relabel&) = default;
};

using Instruction = std::variant<Gate, PhaseGate, Relabel>;

using RegisterMap = std::map<std::string, std::vector<QubitId>>;

// An ordered instruction stream over a fixed set of qubits plus a named
// register layout.  ops[0] acts first.  Instances are immutable once built
// and safe to share across threads.
class Circuit {
 public:
  Circuit(std::size_t qubit_count, RegisterMap registers);

  std::size_t qubit_count() const { return qubit_count_; }
  const RegisterMap& registers() const { return registers_; }
  const std::vector<Instruction>& ops() const { return ops_; }

  const std::vector<QubitId>& reg(const std::string& name) const;

  void append(Instruction inst);
  void append_gate(std::vector<ControlSpec> controls, QubitId target);
  void reserve(std::size_t n) { ops_.reserve(n); }

  // Reverses ops[from, end) in place.  Every instruction there must be
  // self-inverse (gates and relabels); phase gates are rejected.
  void reverse_tail(std::size_t from);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check_gate(const Gate& g) const;
  void check_phase(const PhaseGate& p) const;
  void check_relabel(const Relabel& r) const;

  std::size_t qubit_count_ = 0;
  RegisterMap registers_;
  std::vector<Instruction> ops_;
};

// Concatenation.  Requires identical qubit count and identical register
// layout; throws CircuitError otherwise.
Circuit compose(const Circuit& first, const Circuit& second);

// Reversed stream: gates are self-inverse, conditional phases negate theta,
// Tilde rotations flip to TildeInv (and back), relabels are self-inverse.
Circuit inverse(const Circuit& c);

// Register layout after all Relabel pseudo-ops have been applied.
RegisterMap final_layout(const Circuit& c);

}  // namespace qfn
