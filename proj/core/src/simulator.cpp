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

#include <algorithm>

#include "qfn/simulator.hpp"

namespace qfn {

BasisState::BasisState(std::size_t qubit_count)
    : n_(qubit_count), words_((qubit_count + 63) / 64, 0) {
  if (qubit_count == 0) words_.resize(1, 0);
}

std::uint64_t BasisState::read(const std::vector<QubitId>& reg) const {
  if (reg.size() > 64) throw SimError("register wider than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (get(reg[i])) v |= 1ULL << i;
  return v;
}

void BasisState::write(const std::vector<QubitId>& reg, std::uint64_t value) {
  if (reg.size() < 64 && value >> reg.size())
    throw SimError("value does not fit register width");
  for (std::size_t i = 0; i < reg.size(); ++i) set(reg[i], (value >> i) & 1);
}

namespace {

bool gate_fires(const Gate& g, const BasisState& s) {
  for (const auto& c : g.controls) {
    bool bit = s.get(c.qubit);
    if (c.polarity == Polarity::Positive ? !bit : bit) return false;
  }
  return true;
}

}  // namespace

BasisState run_basis(const Circuit& c, const BasisState& input) {
  if (input.qubit_count() != c.qubit_count())
    throw SimError("run_basis: state width " + std::to_string(input.qubit_count()) +
                   " != circuit width " + std::to_string(c.qubit_count()));
  BasisState s = input;
  for (const auto& op : c.ops()) {
    if (const auto* g = std::get_if<Gate>(&op)) {
      if (gate_fires(*g, s)) s.flip(g->target);
    } else if (std::holds_alternative<PhaseGate>(op)) {
      throw SimError("run_basis: phase gate encountered; use run_statevector");
    }
    // Relabel moves no bits.
  }
  return s;
}

CompiledBasisCircuit::CompiledBasisCircuit(const Circuit& c) : n_(c.qubit_count()) {
  if (n_ > 64) throw SimError("compiled path supports at most 64 qubits");
  gates_.reserve(c.ops().size());
  for (const auto& op : c.ops()) {
    if (const auto* g = std::get_if<Gate>(&op)) {
      CompiledGate cg{0, 0, 1ULL << g->target};
      for (const auto& ctrl : g->controls) {
        cg.ctrl_mask |= 1ULL << ctrl.qubit;
        if (ctrl.polarity == Polarity::Positive) cg.ctrl_value |= 1ULL << ctrl.qubit;
      }
      gates_.push_back(cg);
    } else if (std::holds_alternative<PhaseGate>(op)) {
      throw SimError("compiled path: phase gate encountered");
    }
  }
}

std::uint64_t CompiledBasisCircuit::run(std::uint64_t input) const {
  std::uint64_t s = input;
  for (const auto& g : gates_)
    if ((s & g.ctrl_mask) == g.ctrl_value) s ^= g.target_mask;
  return s;
}

std::string RegisterPredicate::describe() const {
  if (kind == Kind::Zero) return "register " + reg + " must be zero on entry";
  return "register " + reg + " must be < " + std::to_string(bound);
}

void check_contracts(const Network& net, const BasisState& input) {
  for (const auto& p : net.preconditions) {
    std::uint64_t v = input.read(net.circuit.reg(p.reg));
    bool ok = p.kind == RegisterPredicate::Kind::Zero ? v == 0 : v < p.bound;
    if (!ok)
      throw ContractViolation(p.describe() + " (holds " + std::to_string(v) + ")");
  }
}

BasisState run_basis(const Network& net, const BasisState& input, bool contract_checks) {
  if (contract_checks) check_contracts(net, input);
  return run_basis(net.circuit, input);
}

}  // namespace qfn
