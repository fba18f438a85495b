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

#include "qfn/serialize.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <vector>

namespace qfn {

namespace {

const char* rotation_name(RotationKind k) {
  switch (k) {
    case RotationKind::Hat:
      return "hat";
    case RotationKind::Tilde:
      return "tilde";
    case RotationKind::TildeInv:
      return "tilde-inv";
  }
  return "?";
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("bad ") + what + ": '" + tok + "'");
  return v;
}

std::int64_t parse_int(const std::string& tok, std::size_t line, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("bad ") + what + ": '" + tok + "'");
  return v;
}

}  // namespace

void serialize(const Circuit& c, std::ostream& os) {
  os << "qubits " << c.qubit_count() << "\n";
  for (const auto& [name, qubits] : c.registers()) {
    os << "reg " << name;
    for (QubitId q : qubits) os << " " << q;
    os << "\n";
  }
  for (const auto& op : c.ops()) {
    if (const auto* g = std::get_if<Gate>(&op)) {
      os << "cknot";
      for (const auto& ctrl : g->controls)
        os << " " << (ctrl.polarity == Polarity::Negative ? "!" : "") << ctrl.qubit;
      os << " :" << g->target << "\n";
    } else if (const auto* p = std::get_if<PhaseGate>(&op)) {
      if (const auto* rot = std::get_if<PhaseGate::Rotation>(&p->op)) {
        os << "rot " << rotation_name(rot->kind) << " " << rot->qubit << "\n";
      } else {
        const auto& cp = std::get<PhaseGate::ConditionalPhase>(p->op);
        os << "cphase " << cp.a << " " << cp.b << " " << cp.theta.num << "/" << cp.theta.den
           << "\n";
      }
    } else {
      const auto& r = std::get<Relabel>(op);
      os << "relabel " << r.reg_a << " " << r.reg_b << "\n";
    }
  }
}

std::string serialize(const Circuit& c) {
  std::ostringstream ss;
  serialize(c, ss);
  return ss.str();
}

Circuit parse_circuit(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;

  // Header and registers come first; ops follow in execution order.
  std::size_t qubit_count = 0;
  bool have_header = false;
  RegisterMap registers;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> op_lines;

  while (std::getline(is, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& kind = toks[0];
    if (kind == "qubits") {
      if (have_header) throw ParseError(lineno, "duplicate qubits header");
      if (toks.size() != 2) throw ParseError(lineno, "expected: qubits <count>");
      qubit_count = parse_uint(toks[1], lineno, "qubit count");
      have_header = true;
    } else if (kind == "reg") {
      if (!have_header) throw ParseError(lineno, "reg before qubits header");
      if (toks.size() < 2) throw ParseError(lineno, "expected: reg <name> <id...>");
      std::vector<QubitId> qubits;
      for (std::size_t i = 2; i < toks.size(); ++i)
        qubits.push_back(static_cast<QubitId>(parse_uint(toks[i], lineno, "qubit id")));
      if (!registers.emplace(toks[1], std::move(qubits)).second)
        throw ParseError(lineno, "duplicate register '" + toks[1] + "'");
    } else if (kind == "cknot" || kind == "rot" || kind == "cphase" || kind == "relabel") {
      if (!have_header) throw ParseError(lineno, "op before qubits header");
      op_lines.emplace_back(lineno, std::move(toks));
    } else {
      throw ParseError(lineno, "unknown op kind '" + kind + "'");
    }
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing qubits header");

  Circuit c = [&] {
    try {
      return Circuit(qubit_count, std::move(registers));
    } catch (const CircuitError& e) {
      throw ParseError(1, e.what());
    }
  }();

  for (auto& [ln, toks] : op_lines) {
    try {
      const std::string& kind = toks[0];
      if (kind == "cknot") {
        std::vector<ControlSpec> controls;
        bool saw_target = false;
        QubitId target = 0;
        for (std::size_t i = 1; i < toks.size(); ++i) {
          std::string t = toks[i];
          if (t[0] == ':') {
            if (saw_target) throw ParseError(ln, "multiple targets");
            target = static_cast<QubitId>(parse_uint(t.substr(1), ln, "target"));
            saw_target = true;
          } else {
            Polarity pol = Polarity::Positive;
            if (t[0] == '!') {
              pol = Polarity::Negative;
              t = t.substr(1);
            }
            if (saw_target) throw ParseError(ln, "control after target");
            controls.push_back({static_cast<QubitId>(parse_uint(t, ln, "control")), pol});
          }
        }
        if (!saw_target) throw ParseError(ln, "cknot without target");
        c.append_gate(std::move(controls), target);
      } else if (kind == "rot") {
        if (toks.size() != 3) throw ParseError(ln, "expected: rot <hat|tilde|tilde-inv> <q>");
        RotationKind k;
        if (toks[1] == "hat")
          k = RotationKind::Hat;
        else if (toks[1] == "tilde")
          k = RotationKind::Tilde;
        else if (toks[1] == "tilde-inv")
          k = RotationKind::TildeInv;
        else
          throw ParseError(ln, "unknown rotation '" + toks[1] + "'");
        c.append(PhaseGate::rotation(k, static_cast<QubitId>(parse_uint(toks[2], ln, "qubit"))));
      } else if (kind == "cphase") {
        if (toks.size() != 4) throw ParseError(ln, "expected: cphase <q1> <q2> <num>/<den>");
        auto slash = toks[3].find('/');
        if (slash == std::string::npos) throw ParseError(ln, "angle must be <num>/<den>");
        std::int64_t num = parse_int(toks[3].substr(0, slash), ln, "angle numerator");
        std::uint64_t den = parse_uint(toks[3].substr(slash + 1), ln, "angle denominator");
        c.append(PhaseGate::conditional_phase(
            static_cast<QubitId>(parse_uint(toks[1], ln, "qubit")),
            static_cast<QubitId>(parse_uint(toks[2], ln, "qubit")), DyadicPhase(num, den)));
      } else {  // relabel
        if (toks.size() != 3) throw ParseError(ln, "expected: relabel <regA> <regB>");
        c.append(Relabel{toks[1], toks[2]});
      }
    } catch (const CircuitError& e) {
      throw ParseError(ln, e.what());
    }
  }
  return c;
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream ss(text);
  return parse_circuit(ss);
}

}  // namespace qfn
