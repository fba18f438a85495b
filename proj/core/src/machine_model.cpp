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

#include "qfn/machine_model.hpp"

#include <algorithm>
#include <sstream>

namespace qfn {

CostVector CostVector::of_integers(const std::vector<std::int64_t>& v) {
  std::vector<Rational> counts;
  counts.reserve(v.size());
  for (auto n : v) counts.emplace_back(n);
  return CostVector(std::move(counts));
}

Rational CostVector::at(std::size_t arity) const {
  return arity < counts_.size() ? counts_[arity] : Rational(0);
}

void CostVector::add(std::size_t arity, const Rational& amount) {
  if (arity >= counts_.size()) counts_.resize(arity + 1, Rational(0));
  counts_[arity] += amount;
}

CostVector& CostVector::operator+=(const CostVector& o) {
  if (o.counts_.size() > counts_.size()) counts_.resize(o.counts_.size(), Rational(0));
  for (std::size_t i = 0; i < o.counts_.size(); ++i) counts_[i] += o.counts_[i];
  return *this;
}

CostVector CostVector::scaled(const Rational& f) const {
  std::vector<Rational> out;
  out.reserve(counts_.size());
  for (const auto& c : counts_) out.push_back(c * f);
  return CostVector(std::move(out));
}

CostVector CostVector::entrywise_max(const std::vector<CostVector>& vs) {
  CostVector out;
  for (const auto& v : vs)
    for (std::size_t k = 0; k < v.counts_.size(); ++k)
      if (v.counts_[k] > out.at(k)) {
        if (k >= out.counts_.size()) out.counts_.resize(k + 1, Rational(0));
        out.counts_[k] = v.counts_[k];
      }
  return out;
}

CostVector CostVector::mean(const std::vector<CostVector>& vs) {
  CostVector sum;
  for (const auto& v : vs) sum += v;
  return sum.scaled(Rational(1, static_cast<std::int64_t>(vs.size())));
}

bool CostVector::operator==(const CostVector& o) const {
  std::size_t n = std::max(counts_.size(), o.counts_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (at(i) != o.at(i)) return false;
  return true;
}

std::string CostVector::str() const {
  std::ostringstream ss;
  ss << "[";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) ss << ",";
    ss << counts_[i].str();
  }
  ss << "]";
  return ss.str();
}

Rational pulses(const CostVector& v) {
  Rational total = v.at(0);
  for (std::size_t k = 1; k <= v.max_arity(); ++k)
    total += v.at(k) * Rational(static_cast<std::int64_t>(2 * k + 3));
  return total;
}

CostVector count_gates(const Circuit& c) {
  CostVector out;
  for (const auto& op : c.ops())
    if (const auto* g = std::get_if<Gate>(&op)) out.add(g->arity(), Rational(1));
  return out;
}

PhaseOpCount count_phase_ops(const Circuit& c) {
  PhaseOpCount out;
  for (const auto& op : c.ops())
    if (const auto* p = std::get_if<PhaseGate>(&op)) {
      if (std::holds_alternative<PhaseGate::Rotation>(p->op))
        ++out.rotations;
      else
        ++out.conditional_phases;
    }
  return out;
}

Rational circuit_pulses(const Circuit& c) {
  PhaseOpCount ph = count_phase_ops(c);
  return pulses(count_gates(c)) +
         Rational(static_cast<std::int64_t>(ph.rotations * kPulsesPerRotation +
                                            ph.conditional_phases * kPulsesPerConditionalPhase));
}

std::vector<GateSetViolation> validate(const Circuit& c, const MachineModel& m) {
  std::vector<GateSetViolation> out;
  const std::size_t cap = m.max_control_arity();
  for (std::size_t i = 0; i < c.ops().size(); ++i)
    if (const auto* g = std::get_if<Gate>(&c.ops()[i]))
      if (g->arity() > cap) out.push_back({i, g->arity()});
  return out;
}

}  // namespace qfn
