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

#include "qfn/shor_demo.hpp"

#include <algorithm>
#include <numeric>

#include "qfn/numtheory.hpp"
#include "qfn/rng.hpp"

namespace qfn {

LookupTable15 LookupTable15::for_base(std::uint64_t x) {
  if (x == 0 || x >= 15 || std::gcd(x, 15ULL) != 1)
    throw CircuitError("lookup table: x must be a unit mod 15");
  LookupTable15 t;
  t.base = x;
  for (unsigned a = 0; a < 4; ++a) t.rows[a] = static_cast<std::uint8_t>(modpow(x, a, 15));
  return t;
}

Circuit build_expn15(std::uint64_t x, Expn15Style style, unsigned L) {
  if (L < 2) throw CircuitError("expn15: input register needs at least 2 qubits");
  LookupTable15 t = LookupTable15::for_base(x);

  RegisterMap regs;
  std::vector<QubitId> alpha(L), beta(4);
  for (unsigned i = 0; i < L; ++i) alpha[i] = i;
  for (unsigned i = 0; i < 4; ++i) beta[i] = L + i;
  regs["alpha"] = alpha;
  regs["beta"] = beta;
  Circuit c(L + 4, regs);

  // Column bases: a NOT where the column is mostly ones, then one fix per
  // row that disagrees.
  std::array<int, 4> base{};
  for (unsigned j = 0; j < 4; ++j) {
    int ones = 0;
    for (unsigned a = 0; a < 4; ++a) ones += (t.rows[a] >> j) & 1;
    base[j] = ones >= 3 ? 1 : 0;
    if (base[j]) c.append_gate({}, beta[j]);
  }
  std::array<std::vector<unsigned>, 4> fixes;  // fixes[row] = columns to flip
  bool any = false;
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned j = 0; j < 4; ++j)
      if (((t.rows[a] >> j) & 1) != base[j]) {
        fixes[a].push_back(j);
        any = true;
      }
  if (!any) return c;

  // Bases of order two depend only on the low input bit, so every
  // correction is a single-controlled flip on alpha_0.
  if (t.rows[0] == t.rows[2] && t.rows[1] == t.rows[3]) {
    std::vector<unsigned> direct, negated;
    for (unsigned j = 0; j < 4; ++j) {
      int c0 = (t.rows[0] >> j) & 1, c1 = (t.rows[1] >> j) & 1;
      if (c0 == c1) continue;  // constant column, already handled by base
      (c1 ? direct : negated).push_back(j);
    }
    for (unsigned j : direct) c.append_gate({on(alpha[0])}, beta[j]);
    if (!negated.empty()) {
      if (style == Expn15Style::CustomGates) {
        for (unsigned j : negated) c.append_gate({off(alpha[0])}, beta[j]);
      } else {
        c.append_gate({}, alpha[0]);
        for (unsigned j : negated) c.append_gate({on(alpha[0])}, beta[j]);
        c.append_gate({}, alpha[0]);
      }
    }
    return c;
  }

  if (style == Expn15Style::CustomGates) {
    for (unsigned a = 0; a < 4; ++a)
      for (unsigned j : fixes[a])
        c.append_gate({{alpha[1], (a & 2) ? Polarity::Positive : Polarity::Negative},
                       {alpha[0], (a & 1) ? Polarity::Positive : Polarity::Negative}},
                      beta[j]);
    return c;
  }

  // Walk the rows 11 -> 10 -> 00 -> 01 with single input flips so that the
  // current all-ones control pattern matches each row in turn.  Dropping the
  // final flip leaves the top input bit inverted, so each step must apply
  // the fix of the row the input will READ as at the end, not the row it
  // started as; the correlation with the output register is what matters.
  const std::array<unsigned, 4> row_order{3, 2, 0, 1};
  const std::array<QubitId, 4> flip_after{alpha[0], alpha[1], alpha[0], alpha[1]};
  const bool drop_last = style == Expn15Style::DropFinalNot;
  for (unsigned step = 0; step < 4; ++step) {
    unsigned row = row_order[step] ^ (drop_last ? 2u : 0u);
    for (unsigned j : fixes[row]) c.append_gate({on(alpha[1]), on(alpha[0])}, beta[j]);
    if (step < 3 || !drop_last) c.append_gate({}, flip_after[step]);
  }
  return c;
}

Circuit build_mod2k(unsigned L, unsigned K) {
  if (K > L) throw CircuitError("mod2k: K must be <= L");
  RegisterMap regs;
  std::vector<QubitId> alpha(L), beta(K);
  for (unsigned i = 0; i < L; ++i) alpha[i] = i;
  for (unsigned i = 0; i < K; ++i) beta[i] = L + i;
  regs["alpha"] = alpha;
  regs["beta"] = beta;
  Circuit c(L + K, regs);
  for (unsigned i = 0; i < K; ++i) c.append_gate({on(alpha[i])}, beta[i]);
  return c;
}

OrderResult extract_order(std::uint64_t y, unsigned L, std::uint64_t bound) {
  OrderResult out;
  if (y == 0) return out;
  if (L >= 63 || y >= (1ULL << L)) throw std::invalid_argument("extract_order: need y < 2^L");

  // Convergents of y / 2^L; keep the last with denominator < bound.
  std::uint64_t num = y, den = 1ULL << L;
  std::uint64_t h_prev = 0, h = 1;  // numerators p(-2), p(-1)
  std::uint64_t k_prev = 1, k = 0;  // denominators q(-2), q(-1)
  bool found = false;
  while (den != 0) {
    std::uint64_t a = num / den;
    std::uint64_t rem = num % den;
    std::uint64_t h_next = a * h + h_prev;
    std::uint64_t k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    if (k < bound) {
      out.numerator = h;
      out.candidate_r = k;
      found = true;
    } else {
      break;
    }
    num = den;
    den = rem;
  }
  out.success = found && out.candidate_r >= 1;
  return out;
}

FactorResult factor_from_order(std::uint64_t x, std::uint64_t r, std::uint64_t N) {
  FactorResult out;
  if (r < 1) throw std::invalid_argument("factor_from_order: r must be >= 1");
  if (r % 2 != 0) {
    out.reason = "order is odd";
    return out;
  }
  std::uint64_t h = modpow(x, r / 2, N);
  if (h == N - 1) {
    out.reason = "x^(r/2) = -1 (mod N)";
    return out;
  }
  std::uint64_t g1 = std::gcd(h >= 1 ? h - 1 : N - 1, N);
  std::uint64_t g2 = std::gcd(h + 1, N);
  if (g1 <= 1 || g1 >= N || g2 <= 1 || g2 >= N) {
    out.reason = "trivial divisor (candidate order not the true order)";
    return out;
  }
  out.success = true;
  out.f1 = std::min(g1, g2);
  out.f2 = std::max(g1, g2);
  return out;
}

namespace {

// prep rotations + modular exponential + FT over the input register, as a
// single circuit over the exponential circuit's layout.
Circuit assemble_pipeline(const Circuit& expn_circuit, unsigned L) {
  Circuit c(expn_circuit.qubit_count(), expn_circuit.registers());
  const auto& alpha = expn_circuit.reg("alpha");
  if (alpha.size() != L) throw CircuitError("pipeline: alpha width mismatch");
  for (unsigned i = 0; i < L; ++i) c.append(PhaseGate::rotation(RotationKind::Hat, alpha[i]));
  for (const auto& op : expn_circuit.ops()) c.append(op);
  Circuit ft = build_qft(L, RotationKind::Hat);
  for (const auto& op : ft.ops()) c.append(op);  // FT qubits == alpha ids
  return c;
}

MeasurementDistribution bit_reversed(const MeasurementDistribution& d, unsigned L) {
  MeasurementDistribution out;
  out.probabilities.assign(d.probabilities.size(), 0.0);
  for (std::uint64_t p = 0; p < d.probabilities.size(); ++p)
    out.probabilities[reverse_bits(p, L)] = d.probabilities[p];
  return out;
}

}  // namespace

ExperimentReport run_factoring_experiment(std::uint64_t N, std::uint64_t x,
                                          const ExperimentOptions& opts) {
  ExperimentReport report;
  report.N = N;
  report.x = x;
  report.L = opts.L;
  report.seed = opts.seed;

  Circuit expn_circuit = [&] {
    switch (opts.expn) {
      case ExperimentOptions::Expn::Lookup15:
        if (N != 15) throw CircuitError("lookup circuits exist only for N = 15");
        return build_expn15(x, opts.lookup_style, opts.L);
      case ExperimentOptions::Expn::General: {
        ModulusContext ctx(N, bit_width_of(N), x);
        return build_expn(x, ctx, opts.L, opts.cfg).circuit;
      }
      case ExperimentOptions::Expn::MinSpace: {
        ModulusContext ctx(N, bit_width_of(N), x);
        return build_expn_min(x, ctx, opts.L).circuit;
      }
    }
    throw CircuitError("unknown experiment kind");
  }();

  Circuit pipeline = assemble_pipeline(expn_circuit, opts.L);
  report.circuit_pulses = circuit_pulses(pipeline);

  StateVector psi = run_statevector(pipeline, StateVector(pipeline.qubit_count()));
  MeasurementDistribution raw = distribution(psi, pipeline, "alpha");
  report.y_distribution = bit_reversed(raw, opts.L);

  for (std::size_t tr = 0; tr < opts.trials; ++tr) {
    ExperimentTrial trial;
    std::uint64_t raw_pattern = sample(raw, Rng::substream(opts.seed, tr));
    trial.y = reverse_bits(raw_pattern, opts.L);
    if (trial.y == 0) {
      trial.note = "y = 0 is uninformative";
    } else {
      OrderResult ord = extract_order(trial.y, opts.L, N);
      if (!ord.success) {
        trial.note = "no convergent within bound";
      } else {
        trial.candidate_r = ord.candidate_r;
        if (modpow(x, ord.candidate_r, N) != 1) {
          trial.note = "candidate fails x^r = 1 (mod N)";
        } else {
          trial.order_found = true;
          FactorResult f = factor_from_order(x, ord.candidate_r, N);
          if (f.success) {
            trial.success = true;
            trial.f1 = f.f1;
            trial.f2 = f.f2;
            ++report.successes;
          } else {
            trial.note = f.reason;
          }
        }
      }
    }
    report.trials.push_back(std::move(trial));
  }
  return report;
}

QftTestReport run_qft_test(unsigned L, unsigned K) {
  QftTestReport report;
  report.L = L;
  report.K = K;
  Circuit modk = build_mod2k(L, K);
  Circuit pipeline = assemble_pipeline(modk, L);
  report.total_pulses = circuit_pulses(pipeline);
  StateVector psi = run_statevector(pipeline, StateVector(pipeline.qubit_count()));
  report.y_distribution = bit_reversed(distribution(psi, pipeline, "alpha"), L);
  return report;
}

}  // namespace qfn
