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

#include <numeric>

#include "helpers.hpp"
#include "qfn/arith_networks.hpp"
#include "qfn/machine_model.hpp"
#include "qfn/numtheory.hpp"
#include "qfn/rng.hpp"

using namespace qfn;
using qfn::testing::run_named;

namespace {

// Classical oracles the circuits are checked against.
int fa_sum(int a, int b, int c) { return a ^ b ^ c; }
int fa_carry(int a, int b, int c) { return (a & b) | (c & (a | b)); }

constexpr Variant kAllVariants[] = {Variant::E2K1, Variant::E2K2, Variant::B2K3,
                                    Variant::B2K2, Variant::B2K1, Variant::S3K1};

}  // namespace

TEST_CASE("full adder truth table") {
  for (int a = 0; a <= 1; ++a) {
    Circuit c = build_fa(a);
    for (int b = 0; b <= 1; ++b)
      for (int cin = 0; cin <= 1; ++cin) {
        auto out = run_named(c, {{"b", (std::uint64_t)b}, {"c", (std::uint64_t)cin}});
        CHECK(out["b"] == (std::uint64_t)b);
        CHECK(out["c"] == (std::uint64_t)fa_sum(a, b, cin));
        CHECK(out["carry"] == (std::uint64_t)fa_carry(a, b, cin));
      }
  }
  // a=1, (b,c)=(0,0) -> s=1, c'=0 ; (1,1) -> s=1, c'=1
  auto o1 = run_named(build_fa(1), {{"b", 0}, {"c", 0}});
  CHECK(o1["c"] == 1);
  CHECK(o1["carry"] == 0);
  auto o2 = run_named(build_fa(1), {{"b", 1}, {"c", 1}});
  CHECK(o2["c"] == 1);
  CHECK(o2["carry"] == 1);
}

TEST_CASE("fa(0) is the two-gate defining network") {
  Circuit c = build_fa(0);
  REQUIRE(c.ops().size() == 2);
  CHECK(std::get<Gate>(c.ops()[0]) == Gate({on(0), on(1)}, 2));
  CHECK(std::get<Gate>(c.ops()[1]) == Gate({on(0)}, 1));
}

TEST_CASE("multiplexed full adder: all forms match the oracle") {
  for (MuxfaForm form : {MuxfaForm::Prime, MuxfaForm::Plain, MuxfaForm::DoublePrime,
                         MuxfaForm::TriplePrime, MuxfaForm::QuadPrime}) {
    for (std::size_t enables : {std::size_t{0}, std::size_t{1}, std::size_t{2}}) {
      if (form == MuxfaForm::Prime && enables != 0) continue;
      for (int a0 = 0; a0 <= 1; ++a0)
        for (int a1 = 0; a1 <= 1; ++a1) {
          Circuit c = build_muxfa(form, a0, a1, enables);
          for (std::uint64_t e = 0; e < (1ULL << enables); ++e)
            for (int sel = 0; sel <= 1; ++sel)
              for (int b = 0; b <= 1; ++b)
                for (int cin = 0; cin <= 1; ++cin) {
                  qfn::testing::Assignment in{{"select", (std::uint64_t)sel},
                                              {"b", (std::uint64_t)b},
                                              {"c", (std::uint64_t)cin}};
                  if (enables) in["enable"] = e;
                  auto out = run_named(c, in);
                  int all_on = enables == 0 || e == (1ULL << enables) - 1;
                  int a = all_on ? (sel ? a1 : a0) : 0;
                  CHECK(out["select"] == (std::uint64_t)sel);
                  CHECK(out["b"] == (std::uint64_t)b);
                  CHECK(out["c"] == (std::uint64_t)fa_sum(a, b, cin));
                  CHECK(out["carry"] == (std::uint64_t)fa_carry(a, b, cin));
                  if (form == MuxfaForm::DoublePrime) CHECK(out["tau"] == 0);
                }
        }
    }
  }
}

TEST_CASE("muxfa counts quoted in the tables") {
  CHECK(count_gates(build_muxfa(MuxfaForm::Plain, 1, 1, 2)) ==
        CostVector::of_integers({0, 1, 2, 1, 0}));
  // basic-machine forms stay within two controls
  for (MuxfaForm form : {MuxfaForm::DoublePrime, MuxfaForm::TriplePrime})
    for (int a0 = 0; a0 <= 1; ++a0)
      for (int a1 = 0; a1 <= 1; ++a1)
        CHECK(validate(build_muxfa(form, a0, a1, 1), kBasicMachine).empty());
  for (int a0 = 0; a0 <= 1; ++a0)
    for (int a1 = 0; a1 <= 1; ++a1)
      CHECK(validate(build_muxfa(MuxfaForm::QuadPrime, a0, a1, 2), kBasicMachine).empty());
}

TEST_CASE("multiplexed half adder") {
  CHECK(count_gates(build_muxha(0, 0, 2)) == CostVector::of_integers({0, 1}));
  // MUXHA(1,0) with one enable: flip, enabled add of !select, copy, unflip.
  Circuit c10 = build_muxha(1, 0, 1);
  REQUIRE(c10.ops().size() == 4);
  CHECK(std::get<Gate>(c10.ops()[0]) == Gate({}, 0));
  CHECK(std::get<Gate>(c10.ops()[1]) == Gate({on(3), on(0)}, 2));
  CHECK(std::get<Gate>(c10.ops()[2]) == Gate({on(1)}, 2));
  CHECK(std::get<Gate>(c10.ops()[3]) == Gate({}, 0));

  for (std::size_t enables : {std::size_t{0}, std::size_t{1}, std::size_t{2}})
    for (int a0 = 0; a0 <= 1; ++a0)
      for (int a1 = 0; a1 <= 1; ++a1) {
        Circuit c = build_muxha(a0, a1, enables);
        for (std::uint64_t e = 0; e < (1ULL << enables); ++e)
          for (int sel = 0; sel <= 1; ++sel)
            for (int b = 0; b <= 1; ++b)
              for (int cin = 0; cin <= 1; ++cin) {
                qfn::testing::Assignment in{{"select", (std::uint64_t)sel},
                                            {"b", (std::uint64_t)b},
                                            {"c", (std::uint64_t)cin}};
                if (enables) in["enable"] = e;
                auto out = run_named(c, in);
                int all_on = enables == 0 || e == (1ULL << enables) - 1;
                int a = all_on ? (sel ? a1 : a0) : 0;
                CHECK(out["c"] == (std::uint64_t)fa_sum(a, b, cin));
                CHECK(out["b"] == (std::uint64_t)b);
              }
      }
  // a0=1, a1=0, sel=0, enabled, (b,c)=(0,0): adds !sel = 1.
  auto o = run_named(build_muxha(1, 0, 1), {{"select", 0}, {"b", 0}, {"c", 0}, {"enable", 1}});
  CHECK(o["c"] == 1);
}

TEST_CASE("madd adds the selected c-number mod 2^K") {
  const unsigned K = 4;
  // K=4, a=3, a'=9, sel=1, enabled, b=12 -> gamma = 21 mod 16 = 5.
  auto o = run_named(build_madd(3, 9, K, 1),
                     {{"beta", 12}, {"select", 1}, {"enable", 1}});
  CHECK(o["gamma"] == 5);
  // disabled -> copy
  auto o2 = run_named(build_madd(3, 9, K, 1), {{"beta", 12}, {"select", 0}, {"enable", 0}});
  CHECK(o2["gamma"] == 12);

  for (std::uint64_t a = 0; a < 16; a += 3)
    for (std::uint64_t ap = 0; ap < 16; ap += 5) {
      Circuit c = build_madd(a, ap, K, 1);
      for (std::uint64_t b = 0; b < 16; ++b)
        for (int sel = 0; sel <= 1; ++sel)
          for (int e = 0; e <= 1; ++e) {
            auto out = run_named(c, {{"beta", b}, {"select", (std::uint64_t)sel},
                                     {"enable", (std::uint64_t)e}});
            std::uint64_t addend = e ? (sel ? ap : a) : 0;
            CHECK(out["gamma"] == ((b + addend) & 15));
            CHECK(out["beta"] == b);
            CHECK(out["select"] == (std::uint64_t)sel);
          }
    }
}

TEST_CASE("lt: worst-case count and exhaustive comparison") {
  for (unsigned K : {2u, 3u, 4u, 5u}) {
    CHECK(count_gates(build_lt((1ULL << K) - 1, K)) ==
          CostVector::of_integers({K, 2, 2 * (std::int64_t)K - 3}));
    for (std::uint64_t a = 0; a < (1ULL << K); ++a) {
      Circuit c = build_lt(a, K);
      for (std::uint64_t b = 0; b < (1ULL << K); ++b) {
        auto out = run_named(c, {{"beta", b}});
        CHECK(out["result"] == (b < a ? 1 : 0));
        // beta comes out bit-flipped above bit zero; bit zero only if a_0.
        std::uint64_t mask = ((1ULL << K) - 1) & ~1ULL;
        if (a & 1) mask |= 1;
        CHECK(out["beta"] == (b ^ mask));
      }
    }
  }
  auto o = run_named(build_lt(5, 4), {{"beta", 3}});
  CHECK(o["result"] == 1);
  auto o2 = run_named(build_lt(5, 4), {{"beta", 5}});
  CHECK(o2["result"] == 0);
}

TEST_CASE("xlt flips the target and cleans up after itself") {
  auto o = run_named(build_xlt(7, 4, 1), {{"beta", 2}, {"enable", 1}});
  CHECK(o["target"] == 1);
  CHECK(o["beta"] == 2);
  CHECK(o["copy"] == 0);
  CHECK(o["ghat"] == 0);
  auto off_o = run_named(build_xlt(7, 4, 1), {{"beta", 2}, {"enable", 0}});
  CHECK(off_o["target"] == 0);

  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    const unsigned K = 6;
    std::uint64_t a = rng.below(1ULL << K), b = rng.below(1ULL << K);
    std::uint64_t e = rng.below(2), x = rng.below(2);
    auto out = run_named(build_xlt(a, K, 1),
                         {{"beta", b}, {"enable", e}, {"target", x}});
    CHECK(out["target"] == (x ^ (e & (b < a ? 1 : 0))));
    CHECK(out["beta"] == b);
    CHECK(out["copy"] == 0);
    CHECK(out["ghat"] == 0);
  }
}

TEST_CASE("addn computes b + E&a mod N and records the comparison") {
  {
    ModulusContext ctx(5, 3);
    auto o = run_named(build_addn(3, ctx, 1).circuit, {{"beta", 4}, {"enable", 1}});
    CHECK(o["gamma"] == 2);  // 7 mod 5
    CHECK(o["select"] == 0);
    auto o2 = run_named(build_addn(0, ctx, 1).circuit, {{"beta", 4}, {"enable", 1}});
    CHECK(o2["gamma"] == 4);
    CHECK(o2["select"] == 1);
  }
  for (std::uint64_t N = 5; N <= 31; N += 2) {
    unsigned K = bit_width_of(N);
    ModulusContext ctx(N, K);
    for (std::uint64_t a = 0; a < N; a += (N > 15 ? 3 : 1))
      for (int e = 0; e <= 1; ++e) {
        Network net = build_addn(a, ctx, 1);
        for (std::uint64_t b = 0; b < N; ++b) {
          auto out = run_named(net.circuit, {{"beta", b}, {"enable", (std::uint64_t)e}});
          std::uint64_t want = e ? (a + b) % N : b;
          CHECK(out["gamma"] == want);
          CHECK(out["select"] == (std::uint64_t)(e && a + b < N ? 1 : 0));
          CHECK(out["beta"] == b);
        }
      }
  }
}

TEST_CASE("oaddn overwrites and clears its scratch") {
  {
    ModulusContext ctx(15, 4);
    auto o = run_named(build_oaddn(7, ctx, 1).circuit, {{"beta", 11}, {"enable", 1}});
    CHECK(o["beta"] == 3);
    auto o2 = run_named(build_oaddn(7, ctx, 1).circuit, {{"beta", 11}, {"enable", 0}});
    CHECK(o2["beta"] == 11);
    CHECK(o2["gamma"] == 0);
    CHECK(o2["select"] == 0);
  }
  for (std::uint64_t N : {9ULL, 11ULL, 13ULL, 15ULL}) {
    ModulusContext ctx(N, 4);
    for (std::uint64_t a = 0; a < N; ++a) {
      Network net = build_oaddn(a, ctx, 1);
      for (std::uint64_t b = 0; b < N; ++b)
        for (int e = 0; e <= 1; ++e) {
          auto out = run_named(net.circuit, {{"beta", b}, {"enable", (std::uint64_t)e}});
          CHECK(out["beta"] == (e ? (a + b) % N : b));
          CHECK(out["gamma"] == 0);
          CHECK(out["select"] == 0);
        }
    }
  }
}

TEST_CASE("emul writes E & a*b0") {
  auto o = run_named(build_emul(13, 4, 1), {{"source", 1}, {"enable", 1}});
  CHECK(o["gamma"] == 13);
  auto o2 = run_named(build_emul(13, 4, 1), {{"source", 0}, {"enable", 1}});
  CHECK(o2["gamma"] == 0);
  // gate count: popcount(a) gates of arity enables+1
  Circuit c = build_emul(13, 4, 2);
  CostVector v = count_gates(c);
  CHECK(v.at(3) == Rational(3));  // 13 = 0b1101
  CHECK(pulses(v) == Rational(27));
}

TEST_CASE("xor is an enabled bitwise add and an involution") {
  Circuit c = build_xor(4, 1);
  auto o = run_named(c, {{"alpha", 0b1010}, {"beta", 0b0110}, {"enable", 1}});
  CHECK(o["beta"] == 0b1100);
  auto o2 = run_named(c, {{"alpha", 0b1010}, {"beta", 0b0110}, {"enable", 0}});
  CHECK(o2["beta"] == 0b0110);
  auto twice = run_named(compose(c, c), {{"alpha", 0b1010}, {"beta", 0b0110}, {"enable", 1}});
  CHECK(twice["beta"] == 0b0110);
}

TEST_CASE("muln: conditional multiply including the disabled copy-through case") {
  ModulusContext ctx(15, 4, 7);
  NetworkConfig cfg;
  {
    Network net = build_muln(7, ctx, cfg);
    auto o = run_named(net.circuit, {{"beta", 4}, {"enable", 1}});
    CHECK(o["gamma"] == 13);  // 28 mod 15
    auto oz = run_named(net.circuit, {{"beta", 0}, {"enable", 1}});
    CHECK(oz["gamma"] == 0);
  }
  for (std::uint64_t a = 1; a < 15; a += 2) {
    Network net = build_muln(a, ctx, cfg);
    for (std::uint64_t b = 0; b < 15; ++b) {
      auto o1 = run_named(net.circuit, {{"beta", b}, {"enable", 1}});
      CHECK(o1["gamma"] == a * b % 15);
      CHECK(o1["beta"] == b);
      CHECK(o1["select"] == 0);
      CHECK(o1["delta"] == 0);
      auto o0 = run_named(net.circuit, {{"beta", b}, {"enable", 0}});
      CHECK(o0["gamma"] == 0);
      // the disabled multiply must also pass a value parked in gamma through
      auto funny = run_named(net.circuit, {{"beta", 0}, {"gamma", b}, {"enable", 0}});
      CHECK(funny["gamma"] == b);
      CHECK(funny["beta"] == 0);
      CHECK(funny["delta"] == 0);
      CHECK(funny["select"] == 0);
    }
  }
}

TEST_CASE("omuln: overwriting multiply") {
  ModulusContext ctx(15, 4, 7);
  NetworkConfig cfg;
  CHECK_THROWS_AS(build_omuln(3, ctx, cfg), CircuitError);  // gcd(3,15) != 1

  Network net = build_omuln(7, ctx, cfg);
  auto o = run_named(net.circuit, {{"beta", 4}, {"enable", 1}});
  CHECK(o["beta"] == 13);
  CHECK(o["gamma"] == 0);
  CHECK(o["delta"] == 0);
  auto o0 = run_named(net.circuit, {{"beta", 4}, {"enable", 0}});
  CHECK(o0["beta"] == 4);

  // scratch beyond the source register: gamma + select + delta = 2K+1
  std::size_t scratch = net.circuit.reg("gamma").size() + net.circuit.reg("select").size() +
                        net.circuit.reg("delta").size();
  CHECK(scratch == 2 * 4 + 1);

  for (std::uint64_t a : {1ULL, 2ULL, 4ULL, 8ULL, 11ULL, 13ULL, 14ULL}) {
    Network n2 = build_omuln(a, ctx, cfg);
    for (std::uint64_t b = 0; b < 15; ++b)
      for (int e = 0; e <= 1; ++e) {
        auto out = run_named(n2.circuit, {{"beta", b}, {"enable", (std::uint64_t)e}});
        CHECK(out["beta"] == (e ? a * b % 15 : b));
        CHECK(out["gamma"] == 0);
        CHECK(out["delta"] == 0);
        CHECK(out["select"] == 0);
      }
  }
}

TEST_CASE("expn matches the modular-power oracle across variants") {
  // Quoted rows: x=7, N=15, L=2: a=2 -> 4 and a=0 -> 1.
  ModulusContext ctx(15, 4, 7);
  Network net = build_expn(7, ctx, 2, NetworkConfig{});
  auto o = run_named(net.circuit, {{"alpha", 2}});
  CHECK(o["beta"] == 4);
  auto o0 = run_named(net.circuit, {{"alpha", 0}});
  CHECK(o0["beta"] == 1);

  Rng rng(31);
  for (Variant v : kAllVariants) {
    for (unsigned K : {3u, 4u}) {
      // a couple of random (N, x) per width
      for (int pick = 0; pick < 2; ++pick) {
        std::uint64_t N = (1ULL << (K - 1)) + 1 + 2 * rng.below((1ULL << (K - 1)) / 2);
        std::uint64_t x = 1 + rng.below(N - 1);
        if (std::gcd(x, N) != 1) {
          --pick;
          continue;
        }
        unsigned L = 2 * K;
        ModulusContext c2(N, K, x);
        NetworkConfig cfg;
        cfg.variant = v;
        Network n2 = build_expn(x, c2, L, cfg);
        CHECK(validate(n2.circuit, cfg.machine()).empty());
        CompiledBasisCircuit compiled(n2.circuit);
        RegisterMap fl = final_layout(n2.circuit);
        for (std::uint64_t a = 0; a < (1ULL << L); ++a) {
          BasisState in(n2.circuit.qubit_count());
          in.write(n2.circuit.reg("alpha"), a);
          std::uint64_t w = compiled.run(in.words()[0]);
          BasisState out(n2.circuit.qubit_count());
          for (std::size_t q = 0; q < n2.circuit.qubit_count(); ++q)
            out.set(static_cast<QubitId>(q), (w >> q) & 1);
          CHECK(out.read(fl.at("beta")) == modpow(x, a, N));
          CHECK(out.read(fl.at("alpha")) == a);
          for (const char* scr : {"gamma", "delta", "select", "sigma", "tau", "eta"})
            if (fl.count(scr)) CHECK(out.read(fl.at(scr)) == 0);
        }
      }
    }
  }
}

TEST_CASE("expn sampled at wider registers") {
  Rng rng(67);
  for (auto [v, K] : std::initializer_list<std::pair<Variant, unsigned>>{
           {Variant::E2K1, 6}, {Variant::B2K2, 7}, {Variant::S3K1, 10}}) {
    unsigned L = 2 * K;
    std::uint64_t N = 0, x = 0;
    do {
      N = (1ULL << (K - 1)) | (rng.below(1ULL << (K - 1)) | 1);
      x = 1 + rng.below(N - 1);
    } while (std::gcd(x, N) != 1);
    ModulusContext ctx(N, K, x);
    NetworkConfig cfg;
    cfg.variant = v;
    Network net = build_expn(x, ctx, L, cfg);
    CompiledBasisCircuit compiled(net.circuit);
    RegisterMap fl = final_layout(net.circuit);
    std::uint64_t scratch_mask = 0;
    for (const auto& [name, qs] : fl)
      if (name != "alpha" && name != "beta")
        for (QubitId q : qs) scratch_mask |= 1ULL << q;
    for (int s = 0; s < 2000; ++s) {
      std::uint64_t a = rng.below(1ULL << L);
      BasisState in(net.circuit.qubit_count());
      in.write(net.circuit.reg("alpha"), a);
      std::uint64_t w = compiled.run(in.words()[0]);
      REQUIRE((w & scratch_mask) == 0);
      BasisState out(net.circuit.qubit_count());
      for (std::size_t q = 0; q < net.circuit.qubit_count(); ++q)
        out.set(static_cast<QubitId>(q), (w >> q) & 1);
      REQUIRE(out.read(fl.at("beta")) == modpow(x, a, N));
    }
  }
}

TEST_CASE("expn without the first-multiplier shortcut agrees") {
  ModulusContext ctx(13, 4, 6);
  NetworkConfig plain;
  plain.first_mul_optimized = false;
  Network a = build_expn(6, ctx, 3, plain);
  Network b = build_expn(6, ctx, 3, NetworkConfig{});
  for (std::uint64_t v = 0; v < 8; ++v) {
    auto oa = run_named(a.circuit, {{"alpha", v}});
    auto ob = run_named(b.circuit, {{"alpha", v}});
    CHECK(oa["beta"] == ob["beta"]);
    CHECK(oa["beta"] == modpow(6, v, 13));
  }
  // the shortcut saves gates
  CHECK(pulses(count_gates(b.circuit)) < pulses(count_gates(a.circuit)));
}

TEST_CASE("expn register budget") {
  for (unsigned K : {3u, 4u, 5u}) {
    std::uint64_t N = (1ULL << K) - 1;
    ModulusContext ctx(N, K, 2);
    for (Variant v : kAllVariants) {
      NetworkConfig cfg;
      cfg.variant = v;
      Network net = build_expn(2, ctx, 2 * K, cfg);
      CHECK(net.circuit.qubit_count() == 2 * K + K + scratch_width(v, K));
    }
    NetworkConfig e2k1;
    Network net = build_expn(2, ctx, 2 * K, e2k1);
    CHECK(net.circuit.qubit_count() == 5 * K + 1);
  }
}

TEST_CASE("enable neutrality: a zeroed enable bit turns the block off") {
  Rng rng(17);
  ModulusContext ctx(13, 4, 2);
  for (int t = 0; t < 50; ++t) {
    std::uint64_t a = 1 + rng.below(12);
    if (std::gcd(a, 13ULL) != 1) continue;
    Network net = build_omuln(a, ctx, NetworkConfig{});
    std::uint64_t b = rng.below(13);
    auto out = run_named(net.circuit, {{"beta", b}, {"enable", 0}});
    CHECK(out["beta"] == b);
    CHECK(out["gamma"] == 0);
  }
}

TEST_CASE("classical precompute") {
  ModulusContext ctx(15, 4, 7);
  auto p = classical_precompute(7, ctx, 4);
  CHECK(p.powers[0].first == 7);
  CHECK(p.powers[1].first == 4);
  CHECK(p.powers[2].first == 1);
  CHECK(p.powers[3].first == 1);
  for (auto [v, vi] : p.powers) CHECK(mulmod(v, vi, 15) == 1);

  ModulusContext ones(9, 4, 1);
  for (auto [v, vi] : classical_precompute(1, ones, 5).powers) CHECK(v == 1);

  ModulusContext five(5, 3, 2);
  CHECK(classical_precompute(2, five, 1).powers[0].second == 3);  // 2*3 = 6 = 1 mod 5

  ModulusContext bad(15, 4, 5);
  CHECK_THROWS(classical_precompute(5, bad, 2));
}

TEST_CASE("doubling table") {
  ModulusContext ctx(15, 4);
  auto t = doubling_table(7, ctx);
  CHECK(t == std::vector<std::uint64_t>{7, 14, 13, 11});
}

TEST_CASE("reversibility: circuit followed by its inverse is the identity") {
  Rng rng(41);
  ModulusContext ctx(11, 4, 7);
  for (int t = 0; t < 30; ++t) {
    std::uint64_t a = 1 + rng.below(10);
    Network net = std::gcd(a, 11ULL) == 1 ? build_omuln(a, ctx, NetworkConfig{})
                                          : build_oaddn(a, ctx, 1);
    Circuit round = compose(net.circuit, inverse(net.circuit));
    BasisState in(round.qubit_count());
    for (std::size_t q = 0; q < round.qubit_count(); ++q)
      in.set(static_cast<QubitId>(q), rng.below(2));
    CHECK(run_basis(round, in) == in);
  }
}

TEST_CASE("modulus context validation") {
  CHECK_THROWS_AS(ModulusContext(15, 3), CircuitError);  // not a 3-bit number
  CHECK_THROWS_AS(ModulusContext(4, 4), CircuitError);
  CHECK_THROWS_AS(ModulusContext(15, 4, 15), CircuitError);  // x >= N
  CHECK_NOTHROW(ModulusContext(15, 4, 0));
  CHECK_THROWS_AS(ModulusContext(15, 4, 0).require_invertible_base(), CircuitError);
}
