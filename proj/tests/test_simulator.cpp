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

#include <doctest.h>

#include <cmath>
#include <complex>

#include "qfn/arith_networks.hpp"
#include "qfn/machine_model.hpp"
#include "qfn/numtheory.hpp"
#include "qfn/rng.hpp"
#include "qfn/shor_demo.hpp"
#include "qfn/simulator.hpp"

using namespace qfn;

namespace {

Circuit wires(std::size_t n) {
  RegisterMap regs;
  std::vector<QubitId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<QubitId>(i);
  regs["q"] = all;
  return Circuit(n, std::move(regs));
}

}  // namespace

TEST_CASE("basis execution of plain and custom gates") {
  Circuit c = wires(2);
  c.append_gate({}, 0);
  BasisState in(2);
  CHECK(run_basis(c, in).get(0));

  // negated control: flips the target when the control reads zero
  Circuit neg = wires(2);
  neg.append_gate({off(0)}, 1);
  BasisState zero(2);
  BasisState out = run_basis(neg, zero);
  CHECK(out.get(1));
  BasisState one(2);
  one.set(0, true);
  CHECK(!run_basis(neg, one).get(1));
}

TEST_CASE("basis simulator rejects width mismatch and phase gates") {
  Circuit c = wires(3);
  CHECK_THROWS_AS(run_basis(c, BasisState(2)), SimError);
  c.append(PhaseGate::rotation(RotationKind::Hat, 0));
  CHECK_THROWS_AS(run_basis(c, BasisState(3)), SimError);
  CHECK_THROWS_AS((void)CompiledBasisCircuit{c}, SimError);
}

TEST_CASE("full lookup row through the general network") {
  ModulusContext ctx(15, 4, 7);
  Network net = build_expn(7, ctx, 2, NetworkConfig{});
  BasisState in(net.circuit.qubit_count());
  in.write(net.circuit.reg("alpha"), 3);
  BasisState out = run_basis(net.circuit, in);
  CHECK(out.read(final_layout(net.circuit).at("beta")) == 13);
}

TEST_CASE("contract checks flag precondition violations") {
  ModulusContext ctx(13, 4);
  Network net = build_oaddn(5, ctx, 1);
  BasisState bad(net.circuit.qubit_count());
  bad.write(net.circuit.reg("beta"), 14);  // b >= N
  CHECK_THROWS_AS(run_basis(net, bad, true), ContractViolation);
  CHECK_NOTHROW(run_basis(net, bad, false));

  BasisState dirty(net.circuit.qubit_count());
  dirty.write(net.circuit.reg("gamma"), 1);
  CHECK_THROWS_AS(run_basis(net, dirty, true), ContractViolation);

  BasisState good(net.circuit.qubit_count());
  good.write(net.circuit.reg("beta"), 12);
  CHECK_NOTHROW(run_basis(net, good, true));
}

TEST_CASE("basis run is a bijection (inverse round trip)") {
  Rng rng(3);
  ModulusContext ctx(11, 4);
  Network net = build_addn(6, ctx, 1);
  Circuit round = compose(net.circuit, inverse(net.circuit));
  for (int t = 0; t < 200; ++t) {
    BasisState in(round.qubit_count());
    for (std::size_t q = 0; q < round.qubit_count(); ++q)
      in.set(static_cast<QubitId>(q), rng.below(2));
    CHECK(run_basis(round, in) == in);
  }
}

TEST_CASE("rotations and conditional phases act as their matrices") {
  Circuit c = wires(1);
  c.append(PhaseGate::rotation(RotationKind::Hat, 0));
  StateVector psi = run_statevector(c, StateVector(1));
  CHECK(psi.amplitudes()[0].real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(psi.amplitudes()[1].real() == doctest::Approx(1 / std::sqrt(2.0)));

  Circuit cp = wires(2);
  cp.append(PhaseGate::conditional_phase(0, 1, DyadicPhase(1, 2)));
  StateVector on11 = run_statevector(cp, StateVector::basis(2, 3));
  CHECK(on11.amplitudes()[3].imag() == doctest::Approx(1.0));  // i|11>
  StateVector on01 = run_statevector(cp, StateVector::basis(2, 1));
  CHECK(on01.amplitudes()[1].real() == doctest::Approx(1.0));
}

TEST_CASE("determinant-one rotation and its inverse") {
  Circuit c = wires(1);
  c.append(PhaseGate::rotation(RotationKind::Tilde, 0));
  c.append(PhaseGate::rotation(RotationKind::TildeInv, 0));
  StateVector psi = run_statevector(c, StateVector::basis(1, 1));
  CHECK(std::abs(psi.amplitudes()[1] - std::complex<double>{1, 0}) < 1e-12);
}

TEST_CASE("state-vector guard") { CHECK_THROWS_AS(StateVector(27), SimError); }

TEST_CASE("hat FT is the DFT up to output bit reversal") {
  for (unsigned L = 1; L <= 6; ++L) {
    Circuit qft = build_qft(L);
    const double scale = 1.0 / std::sqrt(double(1ULL << L));
    for (std::uint64_t x = 0; x < (1ULL << L); ++x) {
      StateVector psi = run_statevector(qft, StateVector::basis(L, x));
      for (std::uint64_t y = 0; y < (1ULL << L); ++y) {
        double ang = 2 * M_PI * double(reverse_bits(y, L)) * double(x) / double(1ULL << L);
        std::complex<double> want = std::polar(scale, ang);
        CHECK(std::abs(psi.amplitudes()[y] - want) < 1e-12);
      }
    }
  }
}

TEST_CASE("L=3 FT of |1> gives the eighth roots of unity") {
  Circuit qft = build_qft(3);
  StateVector psi = run_statevector(qft, StateVector::basis(3, 1));
  for (std::uint64_t y = 0; y < 8; ++y) {
    std::complex<double> want =
        std::polar(1.0 / std::sqrt(8.0), 2 * M_PI * double(reverse_bits(y, 3)) / 8.0);
    CHECK(std::abs(psi.amplitudes()[y] - want) < 1e-12);
  }
}

TEST_CASE("qft structure: counts and pulses") {
  for (unsigned L : {1u, 2u, 5u, 8u}) {
    Circuit qft = build_qft(L);
    PhaseOpCount ph = count_phase_ops(qft);
    CHECK(ph.rotations == L);
    CHECK(ph.conditional_phases == L * (L - 1) / 2);
    CHECK(circuit_pulses(qft) == Rational(L * (2 * L - 1)));
  }
  CHECK(circuit_pulses(build_qft(2)) == Rational(6));
}

TEST_CASE("tilde and hat FT have identical amplitude moduli") {
  for (unsigned L : {2u, 4u, 6u}) {
    Circuit hat = build_qft(L, RotationKind::Hat);
    Circuit tld = build_qft(L, RotationKind::Tilde);
    for (std::uint64_t x = 0; x < (1ULL << L); ++x) {
      StateVector ph = run_statevector(hat, StateVector::basis(L, x));
      StateVector pt = run_statevector(tld, StateVector::basis(L, x));
      for (std::size_t i = 0; i < ph.amplitudes().size(); ++i)
        CHECK(std::abs(std::abs(ph.amplitudes()[i]) - std::abs(pt.amplitudes()[i])) < 1e-12);
    }
  }
}

TEST_CASE("uniform preparation") {
  Circuit prep = prepare_uniform(2);
  StateVector psi = run_statevector(prep, StateVector(2));
  for (const auto& a : psi.amplitudes()) CHECK(a.real() == doctest::Approx(0.5));
  CHECK(circuit_pulses(prep) == Rational(2));
  CHECK(psi.norm_sq() == doctest::Approx(1.0));
}

TEST_CASE("marginal distributions") {
  // product state: rotate qubit 0 only; qubit 1 untouched
  Circuit c = wires(2);
  c.append(PhaseGate::rotation(RotationKind::Hat, 0));
  StateVector psi = run_statevector(c, StateVector(2));
  MeasurementDistribution d0 = distribution(psi, {0});
  CHECK(d0.probabilities[0] == doctest::Approx(0.5));
  CHECK(d0.probabilities[1] == doctest::Approx(0.5));
  MeasurementDistribution d1 = distribution(psi, {1});
  CHECK(d1.probabilities[0] == doctest::Approx(1.0));
  CHECK(d0.total() == doctest::Approx(1.0));
}

TEST_CASE("post-FT spectrum of the mod-2 function") {
  QftTestReport rep = run_qft_test(2, 1);
  CHECK(rep.y_distribution.probabilities[0] == doctest::Approx(0.5));
  CHECK(rep.y_distribution.probabilities[2] == doctest::Approx(0.5));
  CHECK(rep.y_distribution.probabilities[1] == doctest::Approx(0.0));
  CHECK(rep.y_distribution.probabilities[3] == doctest::Approx(0.0));
}

TEST_CASE("sampling is deterministic and seed-sensitive") {
  MeasurementDistribution d;
  d.probabilities = {0.25, 0.25, 0.25, 0.25};
  auto s1 = sample_many(d, 100, 42);
  auto s2 = sample_many(d, 100, 42);
  CHECK(s1 == s2);
  auto s3 = sample_many(d, 100, 43);
  CHECK(s1 != s3);
  // frequencies roughly uniform
  int counts[4] = {0, 0, 0, 0};
  for (auto v : sample_many(d, 4000, 7)) counts[v]++;
  for (int k = 0; k < 4; ++k) CHECK(std::abs(counts[k] - 1000) < 150);
}

TEST_CASE("ft reference distribution") {
  // r divides 2^L: exactly 1/r on multiples of 2^L/r
  MeasurementDistribution d = ft_reference_prob(8, 4, 0);
  for (std::uint64_t y = 0; y < 256; ++y) {
    double want = (y % 64 == 0) ? 0.25 : 0.0;
    CHECK(std::abs(d.probabilities[y] - want) < 1e-12);
  }
  CHECK(d.total() == doctest::Approx(1.0));

  // r=4, L=8: peaks at {0, 64, 128, 192}
  for (std::uint64_t peak : {0ULL, 64ULL, 128ULL, 192ULL})
    CHECK(d.probabilities[peak] == doctest::Approx(0.25));

  // cross-check against the simulated FT of a mod-2^K state
  QftTestReport rep = run_qft_test(4, 2);
  MeasurementDistribution ref = ft_reference_prob(4, 4, 0);
  for (std::uint64_t y = 0; y < 16; ++y)
    CHECK(std::abs(rep.y_distribution.probabilities[y] - ref.probabilities[y]) < 1e-10);

  // non-dividing period still normalizes
  CHECK(ft_reference_prob(6, 5, 3).total() == doctest::Approx(1.0));
}

TEST_CASE("pruned FT stays close to the full transform") {
  const unsigned L = 10;
  Circuit full = build_qft(L);
  // keep phases down to pi/2^4
  Circuit pruned = build_qft(L, RotationKind::Hat, M_PI / 32.0);
  CHECK(count_phase_ops(pruned).conditional_phases < count_phase_ops(full).conditional_phases);

  // periodic input with r = 4: compare output distributions
  std::uint64_t r = 4;
  StateVector in(L);
  auto& amps = in.amplitudes();
  amps.assign(amps.size(), {0, 0});
  double norm = std::sqrt(double((1ULL << L) / r));
  for (std::uint64_t j = 0; j < (1ULL << L); j += r) amps[j] = {1.0 / norm, 0};

  StateVector out_full = run_statevector(full, in);
  StateVector out_pruned = run_statevector(pruned, in);
  double dropped_angle_sum = 0;
  for (unsigned gap = 5; gap < L; ++gap)
    dropped_angle_sum += double(L - gap) * M_PI / double(1ULL << gap);
  double tv = 0;
  for (std::size_t i = 0; i < amps.size(); ++i)
    tv += std::abs(std::norm(out_full.amplitudes()[i]) - std::norm(out_pruned.amplitudes()[i]));
  CHECK(tv / 2 <= 2 * dropped_angle_sum);
  // peaks survive
  for (std::uint64_t j = 0; j < r; ++j) {
    std::uint64_t peak = reverse_bits(j * (1ULL << L) / r, L);
    CHECK(std::norm(out_pruned.amplitudes()[peak]) > 0.9 / double(r));
  }
}

TEST_CASE("norm is preserved through deep circuits") {
  ModulusContext ctx(15, 4, 7);
  Network net = build_expn(7, ctx, 2, NetworkConfig{});
  Circuit pipeline(net.circuit.qubit_count(), net.circuit.registers());
  for (QubitId q : net.circuit.reg("alpha"))
    pipeline.append(PhaseGate::rotation(RotationKind::Hat, q));
  for (const auto& op : net.circuit.ops()) pipeline.append(op);
  StateVector psi = run_statevector(pipeline, StateVector(pipeline.qubit_count()));
  CHECK(psi.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
}
