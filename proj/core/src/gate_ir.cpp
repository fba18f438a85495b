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

#include "qfn/gate_ir.hpp"

#include <algorithm>
#include <cmath>

namespace qfn {

namespace {

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

Gate::Gate(std::vector<ControlSpec> ctrls, QubitId tgt) : controls(std::move(ctrls)), target(tgt) {
  for (std::size_t i = 0; i < controls.size(); ++i) {
    if (controls[i].qubit == target)
      throw CircuitError("gate: control " + std::to_string(controls[i].qubit) +
                         " coincides with target");
    for (std::size_t j = i + 1; j < controls.size(); ++j)
      if (controls[i].qubit == controls[j].qubit)
        throw CircuitError("gate: duplicate control " + std::to_string(controls[i].qubit));
  }
}

DyadicPhase::DyadicPhase(std::int64_t n, std::uint64_t d) : num(n), den(d) {
  if (!is_power_of_two(den))
    throw CircuitError("phase: denominator must be a power of two, got " + std::to_string(d));
  while (num % 2 == 0 && num != 0 && den > 1) {
    num /= 2;
    den /= 2;
  }
}

double DyadicPhase::radians() const {
  return M_PI * static_cast<double>(num) / static_cast<double>(den);
}

PhaseGate PhaseGate::conditional_phase(QubitId a, QubitId b, DyadicPhase theta) {
  if (a == b) throw CircuitError("cphase: qubits must be distinct");
  return {ConditionalPhase{a, b, theta}};
}

Circuit::Circuit(std::size_t qubit_count, RegisterMap registers)
    : qubit_count_(qubit_count), registers_(std::move(registers)) {
  std::vector<bool> seen(qubit_count_, false);
  for (const auto& [name, qubits] : registers_) {
    if (name.empty()) throw CircuitError("register with empty name");
    for (QubitId q : qubits) {
      if (q >= qubit_count_)
        throw CircuitError("register " + name + ": qubit " + std::to_string(q) + " out of range");
      if (seen[q])
        throw CircuitError("register " + name + ": qubit " + std::to_string(q) +
                           " already bound to another register");
      seen[q] = true;
    }
  }
}

const std::vector<QubitId>& Circuit::reg(const std::string& name) const {
  auto it = registers_.find(name);
  if (it == registers_.end()) throw CircuitError("unknown register: " + name);
  return it->second;
}

void Circuit::check_gate(const Gate& g) const {
  if (g.target >= qubit_count_)
    throw CircuitError("gate target " + std::to_string(g.target) + " out of range");
  for (const auto& c : g.controls)
    if (c.qubit >= qubit_count_)
      throw CircuitError("gate control " + std::to_string(c.qubit) + " out of range");
}

void Circuit::check_phase(const PhaseGate& p) const {
  if (const auto* rot = std::get_if<PhaseGate::Rotation>(&p.op)) {
    if (rot->qubit >= qubit_count_) throw CircuitError("rotation qubit out of range");
  } else {
    const auto& cp = std::get<PhaseGate::ConditionalPhase>(p.op);
    if (cp.a >= qubit_count_ || cp.b >= qubit_count_)
      throw CircuitError("cphase qubit out of range");
  }
}

void Circuit::check_relabel(const Relabel& r) const {
  const auto& a = reg(r.reg_a);
  const auto& b = reg(r.reg_b);
  if (a.size() != b.size())
    throw CircuitError("relabel " + r.reg_a + "<->" + r.reg_b + ": width mismatch");
}

void Circuit::append(Instruction inst) {
  if (const auto* g = std::get_if<Gate>(&inst)) {
    check_gate(*g);
  } else if (const auto* p = std::get_if<PhaseGate>(&inst)) {
    check_phase(*p);
  } else {
    check_relabel(std::get<Relabel>(inst));
  }
  ops_.push_back(std::move(inst));
}

void Circuit::append_gate(std::vector<ControlSpec> controls, QubitId target) {
  append(Gate(std::move(controls), target));
}

void Circuit::reverse_tail(std::size_t from) {
  for (std::size_t i = from; i < ops_.size(); ++i)
    if (std::holds_alternative<PhaseGate>(ops_[i]))
      throw CircuitError("reverse_tail: phase gate is not self-inverse");
  std::reverse(ops_.begin() + from, ops_.end());
}

Circuit compose(const Circuit& first, const Circuit& second) {
  if (first.qubit_count() != second.qubit_count())
    throw CircuitError("compose: qubit count mismatch");
  if (first.registers() != second.registers())
    throw CircuitError("compose: register layout mismatch");
  Circuit out(first.qubit_count(), first.registers());
  out.reserve(first.ops().size() + second.ops().size());
  for (const auto& op : first.ops()) out.append(op);
  for (const auto& op : second.ops()) out.append(op);
  return out;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.qubit_count(), c.registers());
  out.reserve(c.ops().size());
  for (auto it = c.ops().rbegin(); it != c.ops().rend(); ++it) {
    if (const auto* p = std::get_if<PhaseGate>(&*it)) {
      if (const auto* rot = std::get_if<PhaseGate::Rotation>(&p->op)) {
        RotationKind k = rot->kind;
        if (k == RotationKind::Tilde)
          k = RotationKind::TildeInv;
        else if (k == RotationKind::TildeInv)
          k = RotationKind::Tilde;
        out.append(PhaseGate::rotation(k, rot->qubit));
      } else {
        const auto& cp = std::get<PhaseGate::ConditionalPhase>(p->op);
        out.append(PhaseGate::conditional_phase(cp.a, cp.b, DyadicPhase(-cp.theta.num, cp.theta.den)));
      }
    } else {
      out.append(*it);  // gates and relabels are self-inverse
    }
  }
  return out;
}

RegisterMap final_layout(const Circuit& c) {
  RegisterMap regs = c.registers();
  for (const auto& op : c.ops())
    if (const auto* r = std::get_if<Relabel>(&op)) std::swap(regs.at(r->reg_a), regs.at(r->reg_b));
  return regs;
}

}  // namespace qfn
