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

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "qfn/gate_ir.hpp"
#include "qfn/simulator.hpp"

namespace qfn::testing {

using Assignment = std::map<std::string, std::uint64_t>;

// Runs a circuit on the named input assignment and reads every register
// back through the final layout.
inline Assignment run_named(const Circuit& c, const Assignment& in_values) {
  BasisState in(c.qubit_count());
  for (const auto& [name, value] : in_values) in.write(c.reg(name), value);
  BasisState out = run_basis(c, in);
  Assignment result;
  for (const auto& [name, qubits] : final_layout(c)) result[name] = out.read(qubits);
  return result;
}

inline bool scratch_clean(const Assignment& out,
                          std::initializer_list<const char*> scratch_names) {
  for (const char* n : scratch_names) {
    auto it = out.find(n);
    if (it != out.end() && it->second != 0) return false;
  }
  return true;
}

}  // namespace qfn::testing
