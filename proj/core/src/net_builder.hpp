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

// Internal builder shared by the network emitters.  Not installed.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qfn/gate_ir.hpp"
#include "qfn/machine_model.hpp"

namespace qfn::detail {

using Controls = std::vector<ControlSpec>;

// Emits instructions either into a real Circuit or into a bare per-arity
// tally; register bindings are tracked by name in both modes so relabels
// behave identically.  The tally mode keeps memory O(1), which is what
// makes K = 32 counting runs cheap.
class NetBuilder {
 public:
  NetBuilder(std::size_t qubit_count, RegisterMap regs, bool count_only)
      : count_only_(count_only), circuit_(qubit_count, regs), live_(std::move(regs)) {}

  void g(Controls controls, QubitId target) {
    if (count_only_)
      counts_.add(controls.size(), Rational(1));
    else
      circuit_.append_gate(std::move(controls), target);
    ++op_index_;
  }

  void relabel(const std::string& a, const std::string& b) {
    if (!count_only_) circuit_.append(Relabel{a, b});
    relabel_log_.push_back({op_index_, a, b});
    ++op_index_;
    std::swap(live_.at(a), live_.at(b));
  }

  const std::vector<QubitId>& reg(const std::string& name) const { return live_.at(name); }
  QubitId bit(const std::string& name, std::size_t i) const { return live_.at(name).at(i); }

  // Bookkeeping-only swap, no instruction emitted.  Used to lay out a block
  // that is about to be reversed: reversal flips time, so the block must be
  // built under the bindings that will hold when its last op runs first.
  void swap_bindings(const std::string& a, const std::string& b) {
    std::swap(live_.at(a), live_.at(b));
  }

  struct Mark {
    std::size_t op_index;
    std::size_t circuit_size;
    CostVector counts;
    RegisterMap live;
  };

  Mark mark() const { return {op_index_, circuit_.ops().size(), counts_, live_}; }

  // Appends the inverse of the instruction range [from, to).  The range
  // must contain no relabels (arithmetic sub-blocks never do).
  void replay_inverse(const Mark& from, const Mark& to) {
    for (const auto& rl : relabel_log_)
      if (rl.op_index >= from.op_index && rl.op_index < to.op_index)
        throw CircuitError("replay_inverse across a relabel");
    if (count_only_) {
      for (std::size_t k = 0; k <= to.counts.max_arity(); ++k)
        counts_.add(k, to.counts.at(k) - from.counts.at(k));
    } else {
      std::vector<Instruction> tail(circuit_.ops().begin() + from.circuit_size,
                                    circuit_.ops().begin() + to.circuit_size);
      for (auto it = tail.rbegin(); it != tail.rend(); ++it) circuit_.append(*it);
    }
    op_index_ += to.op_index - from.op_index;
  }

  // Reverses the tail [from, end) in place, turning the block just built
  // into its own inverse.  Gates and relabels are self-inverse; the live
  // bindings are re-derived from the snapshot in `from`.
  void invert_tail(const Mark& from) {
    std::vector<RelabelEntry> tail_log;
    for (const auto& rl : relabel_log_)
      if (rl.op_index >= from.op_index) tail_log.push_back(rl);
    relabel_log_.erase(
        std::remove_if(relabel_log_.begin(), relabel_log_.end(),
                       [&](const RelabelEntry& e) { return e.op_index >= from.op_index; }),
        relabel_log_.end());

    const std::size_t base = from.op_index;
    const std::size_t len = op_index_ - from.op_index;
    live_ = from.live;
    for (auto it = tail_log.rbegin(); it != tail_log.rend(); ++it) {
      RelabelEntry e = *it;
      e.op_index = base + (len - 1 - (e.op_index - base));
      relabel_log_.push_back(e);
      std::swap(live_.at(e.a), live_.at(e.b));
    }
    if (!count_only_) circuit_.reverse_tail(from.circuit_size);
  }

  Circuit take_circuit() && { return std::move(circuit_); }
  CostVector take_counts() && { return std::move(counts_); }

 private:
  struct RelabelEntry {
    std::size_t op_index;
    std::string a, b;
  };

  bool count_only_;
  Circuit circuit_;
  CostVector counts_;
  RegisterMap live_;
  std::size_t op_index_ = 0;
  std::vector<RelabelEntry> relabel_log_;
};

inline Controls with(Controls base, ControlSpec extra) {
  base.push_back(extra);
  return base;
}

inline Controls with(Controls base, ControlSpec e1, ControlSpec e2) {
  base.push_back(e1);
  base.push_back(e2);
  return base;
}

// Borrowed-bit identity (Barenco et al., quant-ph/9503016): a gate with
// control string A+z becomes two copies of C_[[A]],w and two of C_[[w,z]],t,
// where the borrowed qubit w is not required to start in |0>.
inline void emit_borrowed(NetBuilder& b, const Controls& a_part, ControlSpec z, QubitId w,
                          QubitId target) {
  b.g(a_part, w);
  b.g({on(w), z}, target);
  b.g(a_part, w);
  b.g({on(w), z}, target);
}

}  // namespace qfn::detail
