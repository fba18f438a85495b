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

#include <iosfwd>
#include <string>

#include "qfn/gate_ir.hpp"

namespace qfn {

// Circuit document format, one instruction per line, execution order:
//
//   qubits 12
//   reg alpha 0 1 2 3
//   cknot 0 !1 :5
//   rot hat 0
//   cphase 0 1 1/2
//   relabel beta gamma
//
// `!` marks a negative-polarity control; the `:` token is the target.
// cphase angles are exact multiples of pi (num/den, den a power of two).
// Parsing is strict: the first violation is reported with its line number.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string serialize(const Circuit& c);
void serialize(const Circuit& c, std::ostream& os);

Circuit parse_circuit(const std::string& text);
Circuit parse_circuit(std::istream& is);

}  // namespace qfn
