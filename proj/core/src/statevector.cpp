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

#include <cmath>
#include <numeric>

#include "qfn/numtheory.hpp"
#include "qfn/rng.hpp"
#include "qfn/simulator.hpp"

namespace qfn {

namespace {

constexpr double kNormTolerance = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void apply_gate(const Gate& g, std::vector<std::complex<double>>& amps) {
  std::uint64_t cmask = 0, cval = 0;
  for (const auto& c : g.controls) {
    cmask |= 1ULL << c.qubit;
    if (c.polarity == Polarity::Positive) cval |= 1ULL << c.qubit;
  }
  const std::uint64_t t = 1ULL << g.target;
  const std::uint64_t size = amps.size();
  for (std::uint64_t i = 0; i < size; ++i)
    if ((i & t) == 0 && (i & cmask) == cval) {
      std::uint64_t j = i | t;
      // Both halves of the pair must satisfy the controls; the target is
      // never a control, so this holds whenever i does.
      std::swap(amps[i], amps[j]);
    }
}

// Amplitude-space 2x2 for the rotations.  Hat is the symmetric mix; Tilde
// is its determinant-one cousin, which acts on amplitudes as
// (c0, c1) -> ((c0 - c1)/sqrt2, (c0 + c1)/sqrt2).
void apply_rotation(RotationKind kind, QubitId q, std::vector<std::complex<double>>& amps) {
  const std::uint64_t t = 1ULL << q;
  const std::uint64_t size = amps.size();
  for (std::uint64_t i = 0; i < size; ++i)
    if ((i & t) == 0) {
      auto a0 = amps[i];
      auto a1 = amps[i | t];
      switch (kind) {
        case RotationKind::Hat:
          amps[i] = (a0 + a1) * kInvSqrt2;
          amps[i | t] = (a0 - a1) * kInvSqrt2;
          break;
        case RotationKind::Tilde:
          amps[i] = (a0 - a1) * kInvSqrt2;
          amps[i | t] = (a0 + a1) * kInvSqrt2;
          break;
        case RotationKind::TildeInv:
          amps[i] = (a0 + a1) * kInvSqrt2;
          amps[i | t] = (a1 - a0) * kInvSqrt2;
          break;
      }
    }
}

void apply_cphase(const PhaseGate::ConditionalPhase& cp, std::vector<std::complex<double>>& amps) {
  const std::uint64_t mask = (1ULL << cp.a) | (1ULL << cp.b);
  const std::complex<double> phase = std::polar(1.0, cp.theta.radians());
  const std::uint64_t size = amps.size();
  for (std::uint64_t i = 0; i < size; ++i)
    if ((i & mask) == mask) amps[i] *= phase;
}

}  // namespace

StateVector::StateVector(std::size_t qubit_count) : n_(qubit_count) {
  if (qubit_count > kMaxStateVectorQubits)
    throw SimError("state vector limited to " + std::to_string(kMaxStateVectorQubits) + " qubits");
  amps_.assign(1ULL << qubit_count, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

StateVector StateVector::basis(std::size_t qubit_count, std::uint64_t index) {
  StateVector psi(qubit_count);
  psi.amps_[0] = {0.0, 0.0};
  psi.amps_.at(index) = {1.0, 0.0};
  return psi;
}

double StateVector::norm_sq() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

StateVector run_statevector(const Circuit& c, StateVector psi) {
  if (psi.qubit_count() != c.qubit_count()) throw SimError("run_statevector: width mismatch");
  auto& amps = psi.amplitudes();
  for (const auto& op : c.ops()) {
    if (const auto* g = std::get_if<Gate>(&op)) {
      apply_gate(*g, amps);
    } else if (const auto* p = std::get_if<PhaseGate>(&op)) {
      if (const auto* rot = std::get_if<PhaseGate::Rotation>(&p->op))
        apply_rotation(rot->kind, rot->qubit, amps);
      else
        apply_cphase(std::get<PhaseGate::ConditionalPhase>(p->op), amps);
    }
    if (std::abs(psi.norm_sq() - 1.0) > kNormTolerance)
      throw SimError("state vector norm drifted beyond 1e-12");
  }
  return psi;
}

double MeasurementDistribution::total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

MeasurementDistribution distribution(const StateVector& psi, const std::vector<QubitId>& reg) {
  MeasurementDistribution d;
  d.probabilities.assign(1ULL << reg.size(), 0.0);
  const auto& amps = psi.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    std::uint64_t pattern = 0;
    for (std::size_t b = 0; b < reg.size(); ++b)
      if ((i >> reg[b]) & 1) pattern |= 1ULL << b;
    d.probabilities[pattern] += p;
  }
  return d;
}

MeasurementDistribution distribution(const StateVector& psi, const Circuit& c,
                                     const std::string& reg_name) {
  RegisterMap layout = final_layout(c);
  auto it = layout.find(reg_name);
  if (it == layout.end()) throw SimError("unknown register: " + reg_name);
  return distribution(psi, it->second);
}

std::uint64_t sample(const MeasurementDistribution& d, std::uint64_t seed) {
  Rng rng(seed);
  double u = rng.uniform01() * d.total();
  double acc = 0;
  for (std::uint64_t i = 0; i < d.probabilities.size(); ++i) {
    acc += d.probabilities[i];
    if (u < acc) return i;
  }
  return d.probabilities.size() - 1;
}

std::vector<std::uint64_t> sample_many(const MeasurementDistribution& d, std::size_t count,
                                       std::uint64_t seed) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample(d, Rng::substream(seed, i)));
  return out;
}

Circuit build_qft(std::size_t L, RotationKind variant, std::optional<double> prune_drops_below) {
  if (L < 1) throw CircuitError("build_qft: L must be >= 1");
  RegisterMap regs;
  std::vector<QubitId> in(L);
  for (std::size_t i = 0; i < L; ++i) in[i] = static_cast<QubitId>(i);
  regs["input"] = in;
  Circuit c(L, std::move(regs));

  // Highest qubit first; each qubit's conditional phases precede its
  // rotation.  theta = pi / 2^(k-j) between qubits j < k.
  for (std::size_t jj = L; jj-- > 0;) {
    for (std::size_t k = L; k-- > jj + 1;) {
      std::size_t gap = k - jj;
      double theta = M_PI / static_cast<double>(1ULL << gap);
      if (prune_drops_below && theta < *prune_drops_below) continue;
      c.append(PhaseGate::conditional_phase(static_cast<QubitId>(jj), static_cast<QubitId>(k),
                                            DyadicPhase(1, 1ULL << gap)));
    }
    c.append(PhaseGate::rotation(variant, static_cast<QubitId>(jj)));
  }
  return c;
}

Circuit prepare_uniform(std::size_t L) {
  RegisterMap regs;
  std::vector<QubitId> in(L);
  for (std::size_t i = 0; i < L; ++i) in[i] = static_cast<QubitId>(i);
  regs["input"] = in;
  Circuit c(L, std::move(regs));
  for (std::size_t i = 0; i < L; ++i)
    c.append(PhaseGate::rotation(RotationKind::Hat, static_cast<QubitId>(i)));
  return c;
}

MeasurementDistribution ft_reference_prob(std::size_t L, std::uint64_t r, std::uint64_t offset_k) {
  if (r < 1) throw SimError("ft_reference_prob: r must be >= 1");
  const std::uint64_t two_L = 1ULL << L;
  if (two_L < r) throw SimError("ft_reference_prob: need 2^L >= r");
  // Support size: number of j >= 0 with offset + r*j < 2^L.
  const std::uint64_t support = (two_L - offset_k + r - 1) / r;

  MeasurementDistribution d;
  d.probabilities.assign(two_L, 0.0);
  for (std::uint64_t y = 0; y < two_L; ++y) {
    double phi = 2.0 * M_PI * static_cast<double>(mulmod(y, r % two_L, two_L)) /
                 static_cast<double>(two_L);
    double mag_sq;
    if (std::fmod(phi, 2.0 * M_PI) == 0.0) {
      mag_sq = static_cast<double>(support) * static_cast<double>(support);
    } else {
      double s = std::sin(static_cast<double>(support) * phi / 2.0) / std::sin(phi / 2.0);
      mag_sq = s * s;
    }
    d.probabilities[y] = mag_sq / (static_cast<double>(support) * static_cast<double>(two_L));
  }
  return d;
}

}  // namespace qfn
