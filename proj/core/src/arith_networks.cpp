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

#include "qfn/arith_networks.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "net_builder.hpp"
#include "qfn/numtheory.hpp"

namespace qfn {

ModulusContext::ModulusContext(std::uint64_t modulus, unsigned bits, std::uint64_t base)
    : N(modulus), K(bits), x(base) {
  if (K == 0 || K > 62) throw CircuitError("ModulusContext: K out of range");
  if (!(N >= (1ULL << (K - 1)) && N < (1ULL << K)))
    throw CircuitError("ModulusContext: N is not a K-bit number");
  if (x >= N) throw CircuitError("ModulusContext: base must satisfy 0 <= x < N");
}

void ModulusContext::require_invertible_base() const {
  if (x == 0 || std::gcd(x, N) != 1)
    throw CircuitError("base " + std::to_string(x) + " is not invertible mod " +
                       std::to_string(N));
}

MachineModel machine_for(Variant v) {
  switch (v) {
    case Variant::E2K1:
    case Variant::E2K2:
    case Variant::S3K1:
      return kEnhancedMachine;
    case Variant::B2K3:
    case Variant::B2K2:
    case Variant::B2K1:
      return kBasicMachine;
  }
  return kBasicMachine;
}

unsigned scratch_width(Variant v, unsigned K) {
  switch (v) {
    case Variant::E2K1:
    case Variant::B2K1:
      return 2 * K + 1;
    case Variant::E2K2:
    case Variant::B2K2:
      return 2 * K + 2;
    case Variant::B2K3:
      return 2 * K + 3;
    case Variant::S3K1:
      return 3 * K + 1;
  }
  return 0;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::E2K1:
      return "e2k1";
    case Variant::E2K2:
      return "e2k2";
    case Variant::B2K3:
      return "b2k3";
    case Variant::B2K2:
      return "b2k2";
    case Variant::B2K1:
      return "b2k1";
    case Variant::S3K1:
      return "s3k1";
  }
  return "?";
}

Variant variant_from_name(const std::string& name) {
  for (Variant v : {Variant::E2K1, Variant::E2K2, Variant::B2K3, Variant::B2K2, Variant::B2K1,
                    Variant::S3K1})
    if (variant_name(v) == name) return v;
  throw CircuitError("unknown variant: " + name);
}

namespace {

using detail::Controls;
using detail::NetBuilder;
using detail::emit_borrowed;
using detail::with;

struct VariantTraits {
  MuxfaForm muxfa_form = MuxfaForm::Plain;
  bool and_bit = false;           // combine the OADDN enable pair in sigma
  bool muxfa_scratch = false;     // DoublePrime needs the tau qubit
  bool basic_expand = false;      // expand leftover long gates (B2K1)
  bool emul_via_sigma = false;    // route EMUL's enable pair through sigma
  bool compare_in_place = false;  // S3K1: comparison junk parked in eta
};

VariantTraits traits_for(Variant v) {
  switch (v) {
    case Variant::E2K1:
      return {MuxfaForm::Plain, false, false, false, false, false};
    case Variant::E2K2:
      return {MuxfaForm::Plain, true, false, false, true, false};
    case Variant::B2K3:
      return {MuxfaForm::DoublePrime, true, true, false, true, false};
    case Variant::B2K2:
      return {MuxfaForm::TriplePrime, true, false, false, true, false};
    case Variant::B2K1:
      return {MuxfaForm::QuadPrime, false, false, true, false, false};
    case Variant::S3K1:
      return {MuxfaForm::Plain, true, false, false, true, true};
  }
  return {};
}

// ---- Multiplexed adder cells ----
//
// Cell roles: sel is the select line, qb the preserved register bit, qc
// carries in and receives the sum, qcarry is preset 0 and receives the
// carry.  Addend: E & (a1 if sel else a0).

struct CellStyle {
  MuxfaForm form = MuxfaForm::Plain;
  Controls enables;             // empty = the Prime form behaviour
  std::optional<QubitId> tau;   // DoublePrime scratch bit
  bool expand_basic = false;    // B2K1: no gate may exceed two controls
};

void emit_muxfa(NetBuilder& b, const CellStyle& cell, int a0, int a1, QubitId sel, QubitId qb,
                QubitId qc, QubitId qcarry) {
  const Controls& en = cell.enables;
  auto tail = [&] {
    b.g({on(qb), on(qc)}, qcarry);
    b.g({on(qb)}, qc);
  };

  if (a0 == 0 && a1 == 0) {
    tail();
    return;
  }

  if (a0 == 1 && a1 == 1) {
    // Adds E, independent of the select bit.
    if (cell.expand_basic && en.size() == 2)
      emit_borrowed(b, en, on(qc), qb, qcarry);
    else
      b.g(with(en, on(qc)), qcarry);
    b.g(en, qc);
    tail();
    return;
  }

  // a0 != a1: the addend is sel (or, via the NOT sandwich, !sel).
  const bool flipped = (a0 == 1);
  if (flipped) b.g({}, sel);

  switch (cell.form) {
    case MuxfaForm::Prime:
    case MuxfaForm::Plain:
      b.g(with(en, on(sel), on(qc)), qcarry);
      b.g(with(en, on(sel)), qc);
      tail();
      break;
    case MuxfaForm::DoublePrime: {
      QubitId tau = cell.tau.value();
      b.g(with(en, on(sel)), tau);
      b.g({on(tau), on(qc)}, qcarry);
      b.g({on(tau)}, qc);
      tail();
      b.g(with(en, on(sel)), tau);
      break;
    }
    case MuxfaForm::TriplePrime:
      emit_borrowed(b, with(en, on(sel)), on(qc), qb, qcarry);
      b.g(with(en, on(sel)), qc);
      tail();
      break;
    case MuxfaForm::QuadPrime: {
      // The four-control gate borrows qb, which leaves C_[[E,sel]] legs of
      // three controls; those borrow qcarry in turn.
      auto e_sel_into = [&](QubitId t) { emit_borrowed(b, en, on(sel), qcarry, t); };
      e_sel_into(qb);
      b.g({on(qb), on(qc)}, qcarry);
      e_sel_into(qb);
      b.g({on(qb), on(qc)}, qcarry);
      e_sel_into(qc);
      tail();
      break;
    }
  }
  if (flipped) b.g({}, sel);
}

void emit_muxha(NetBuilder& b, const CellStyle& cell, int a0, int a1, QubitId sel, QubitId qb,
                QubitId qc) {
  const Controls& en = cell.enables;
  auto tail = [&] { b.g({on(qb)}, qc); };

  if (a0 == 0 && a1 == 0) {
    tail();
    return;
  }
  if (a0 == 1 && a1 == 1) {
    b.g(en, qc);
    tail();
    return;
  }
  const bool flipped = (a0 == 1);
  if (flipped) b.g({}, sel);
  if (cell.expand_basic && en.size() == 2)
    emit_borrowed(b, en, on(sel), qb, qc);
  else
    b.g(with(en, on(sel)), qc);
  tail();
  if (flipped) b.g({}, sel);
}

// ---- Comparison ----
//
// Left-to-right scan of the c-number a against the register b.  ell is
// flipped when b < a.  The scan flips every register bit in passing
// (bit 0 only when a_0 = 1) and fills ghat (K-1 qubits) with the switch
// chain; the caller repairs both by running the scan backwards.
void emit_lt(NetBuilder& b, std::uint64_t a, unsigned K, const std::vector<QubitId>& beta,
             QubitId ell, const std::vector<QubitId>& ghat) {
  auto abit = [&](unsigned i) { return (a >> i) & 1; };
  if (K == 1) {
    if (abit(0)) {
      b.g({}, beta[0]);
      b.g({on(beta[0])}, ell);
    }
    return;
  }
  // Top bit: no switch read.
  if (abit(K - 1)) {
    b.g({on(beta[K - 1])}, ghat[K - 2]);
    b.g({}, beta[K - 1]);
    b.g({on(beta[K - 1])}, ell);
  } else {
    b.g({}, beta[K - 1]);
    b.g({on(beta[K - 1])}, ghat[K - 2]);
  }
  for (unsigned i = K - 2; i >= 1; --i) {
    if (abit(i)) {
      b.g({on(ghat[i]), on(beta[i])}, ghat[i - 1]);
      b.g({}, beta[i]);
      b.g({on(ghat[i]), on(beta[i])}, ell);
    } else {
      b.g({}, beta[i]);
      b.g({on(ghat[i]), on(beta[i])}, ghat[i - 1]);
    }
  }
  if (abit(0)) {
    b.g({}, beta[0]);
    b.g({on(ghat[0]), on(beta[0])}, ell);
  }
}

// Same scan with negated-control ("custom") gates instead of register
// flips, so the compared register is left untouched.  Used where the
// comparison result must stay live across a multiplexed add (S3K1).
void emit_lt_clean(NetBuilder& b, std::uint64_t a, unsigned K, const std::vector<QubitId>& beta,
                   QubitId ell, const std::vector<QubitId>& ghat) {
  auto abit = [&](unsigned i) { return (a >> i) & 1; };
  if (K == 1) {
    if (abit(0)) b.g({off(beta[0])}, ell);
    return;
  }
  if (abit(K - 1)) {
    b.g({off(beta[K - 1])}, ell);
    b.g({on(beta[K - 1])}, ghat[K - 2]);
  } else {
    b.g({off(beta[K - 1])}, ghat[K - 2]);
  }
  for (unsigned i = K - 2; i >= 1; --i) {
    if (abit(i)) {
      b.g({on(ghat[i]), off(beta[i])}, ell);
      b.g({on(ghat[i]), on(beta[i])}, ghat[i - 1]);
    } else {
      b.g({on(ghat[i]), off(beta[i])}, ghat[i - 1]);
    }
  }
  if (abit(0)) b.g({on(ghat[0]), off(beta[0])}, ell);
}

// ---- Multiplexed K-bit add (mod 2^K) ----
//
// dst must be preset 0 and receives src + addend; the final carry is
// dropped.  Cells run from bit 0 up; each cell's carry lands in dst[i+1]
// and doubles as the next cell's carry-in.
void emit_madd(NetBuilder& b, const CellStyle& cell, std::uint64_t u, std::uint64_t v, unsigned K,
               QubitId sel, const std::vector<QubitId>& src, const std::vector<QubitId>& dst) {
  for (unsigned i = 0; i + 1 < K; ++i)
    emit_muxfa(b, cell, (u >> i) & 1, (v >> i) & 1, sel, src[i], dst[i], dst[i + 1]);
  emit_muxha(b, cell, (u >> (K - 1)) & 1, (v >> (K - 1)) & 1, sel, src[K - 1], dst[K - 1]);
}

// ---- XLT: enabled comparison with self-cleanup ----
void emit_xlt(NetBuilder& b, std::uint64_t a, unsigned K, const std::vector<QubitId>& beta,
              QubitId target, QubitId copy, const std::vector<QubitId>& ghat,
              const Controls& enables, bool expand_basic, QubitId borrow) {
  auto m0 = b.mark();
  emit_lt(b, a, K, beta, copy, ghat);
  auto m1 = b.mark();
  Controls ctrls = with(enables, on(copy));
  if (expand_basic && ctrls.size() == 3)
    emit_borrowed(b, enables, on(copy), borrow, target);
  else
    b.g(std::move(ctrls), target);
  b.replay_inverse(m0, m1);
}

// ---- Mod N addition ----
//
// scr <- acc + E&a (mod N); the select line records E&(a+b<N) and is left
// for the enclosing overwriting routine to clear.  scr also supplies the
// comparison's copy bit and junk space, all zero again before the add.
void emit_addn(NetBuilder& b, std::uint64_t a, const ModulusContext& ctx, const Controls& enables,
               const CellStyle& cell, const std::string& acc, const std::string& scr,
               bool expand_basic) {
  const unsigned K = ctx.K;
  const std::uint64_t two_k = 1ULL << K;
  std::vector<QubitId> acc_q = b.reg(acc);
  std::vector<QubitId> scr_q = b.reg(scr);
  QubitId sel = b.bit("select", 0);

  std::vector<QubitId> ghat(scr_q.begin() + 1, scr_q.end());
  emit_xlt(b, ctx.N - a, K, acc_q, sel, scr_q[0], ghat, enables, expand_basic, acc_q[0]);
  emit_madd(b, cell, two_k + a - ctx.N, a, K, sel, acc_q, scr_q);
}

// ---- Overwriting mod N addition ----
void emit_oaddn(NetBuilder& b, std::uint64_t a, const ModulusContext& ctx,
                const Controls& cell_enables, const VariantTraits& t, const CellStyle& cell,
                const std::string& acc, const std::string& scr) {
  const unsigned K = ctx.K;
  const std::uint64_t two_k = 1ULL << K;

  if (t.compare_in_place) {
    // One comparison guards each multiplexed add directly: the raw b < N-a
    // bit selects the addend, so no enabled copy of it is ever made.  Each
    // scan is undone while its source register still holds its value.
    QubitId raw = b.bit("select", 0);
    std::vector<QubitId> eta = b.reg("eta");
    std::vector<QubitId> acc_q = b.reg(acc);
    std::vector<QubitId> scr_q = b.reg(scr);

    auto c0 = b.mark();
    emit_lt_clean(b, ctx.N - a, K, acc_q, raw, eta);
    auto c1 = b.mark();
    emit_madd(b, cell, two_k + a - ctx.N, a, K, raw, acc_q, scr_q);
    b.replay_inverse(c0, c1);  // clear raw + eta against acc

    auto c2 = b.mark();
    emit_lt_clean(b, a, K, scr_q, raw, eta);
    auto c3 = b.mark();
    auto c4 = b.mark();
    emit_madd(b, cell, two_k - a, ctx.N - a, K, raw, scr_q, acc_q);
    b.invert_tail(c4);         // acc: b -> 0 given scr = sum
    b.replay_inverse(c2, c3);  // clear raw + eta against scr
    b.relabel(acc, scr);
    return;
  }

  emit_addn(b, a, ctx, cell_enables, cell, acc, scr, t.basic_expand);
  b.g(cell_enables, b.bit("select", 0));
  auto m = b.mark();
  emit_addn(b, ctx.N - a, ctx, cell_enables, cell, scr, acc, t.basic_expand);
  b.invert_tail(m);
  b.relabel(acc, scr);
}

// ---- Conditional mod N multiply ----
//
// dst <- E & (a * src mod N), src preserved.  enable is a single control.
void emit_muln(NetBuilder& b, std::uint64_t a, const ModulusContext& ctx, ControlSpec enable,
               const VariantTraits& t, const std::string& src, const std::string& dst,
               const std::string& scr) {
  const unsigned K = ctx.K;
  CellStyle cell{t.muxfa_form, {}, std::nullopt, t.basic_expand};
  if (t.muxfa_scratch) cell.tau = b.bit("tau", 0);

  auto dtable = doubling_table(a, ctx);

  // EMUL: load a * src_0 into dst.
  QubitId src0 = b.bit(src, 0);
  if (t.emul_via_sigma) {
    QubitId sigma = b.bit("sigma", 0);
    b.g({enable, on(src0)}, sigma);
    for (unsigned i = 0; i < K; ++i)
      if ((a >> i) & 1) b.g({on(sigma)}, b.bit(dst, i));
    b.g({enable, on(src0)}, sigma);
  } else {
    for (unsigned i = 0; i < K; ++i)
      if ((a >> i) & 1) b.g({enable, on(src0)}, b.bit(dst, i));
  }

  for (unsigned i = 1; i < K; ++i) {
    Controls pair = {enable, on(b.bit(src, i))};
    if (t.and_bit) {
      QubitId sigma = b.bit("sigma", 0);
      b.g(pair, sigma);
      cell.enables = {on(sigma)};
      emit_oaddn(b, dtable[i], ctx, {on(sigma)}, t, cell, dst, scr);
      b.g(pair, sigma);
    } else {
      cell.enables = pair;
      emit_oaddn(b, dtable[i], ctx, pair, t, cell, dst, scr);
    }
  }
}

// ---- Overwriting conditional multiply ----
void emit_omuln(NetBuilder& b, std::uint64_t a, const ModulusContext& ctx, ControlSpec enable,
                const VariantTraits& t, const std::string& src, const std::string& dst,
                const std::string& scr) {
  const unsigned K = ctx.K;
  std::uint64_t a_inv = modinv(a % ctx.N, ctx.N);

  emit_muln(b, a, ctx, enable, t, src, dst, scr);
  auto m = b.mark();
  // The inverse multiply ends, in reversed time, with src and scr swapped
  // (one relabel per chained adder); build it under those bindings.
  if ((K - 1) % 2 == 1) b.swap_bindings(src, scr);
  emit_muln(b, a_inv, ctx, enable, t, dst, src, scr);
  b.invert_tail(m);

  // Two enabled XORs swap the product into src and zero dst.
  for (unsigned i = 0; i < K; ++i) b.g({enable, on(b.bit(dst, i))}, b.bit(src, i));
  for (unsigned i = 0; i < K; ++i) b.g({enable, on(b.bit(src, i))}, b.bit(dst, i));
}

// ---- Modular exponentiation ----
void emit_expn(NetBuilder& b, std::uint64_t x, const ModulusContext& ctx, unsigned L,
               const NetworkConfig& cfg) {
  const VariantTraits t = traits_for(cfg.variant);
  auto powers = classical_precompute(x, ctx, L);

  if (cfg.first_mul_optimized) {
    // x^(a_0) straight into beta: EMUL(x) then flip beta_0 when a_0 = 0.
    QubitId a0 = b.bit("alpha", 0);
    for (unsigned i = 0; i < ctx.K; ++i)
      if ((x >> i) & 1) b.g({on(a0)}, b.bit("beta", i));
    b.g({}, a0);
    b.g({on(a0)}, b.bit("beta", 0));
    b.g({}, a0);
  } else {
    b.g({}, b.bit("beta", 0));
    emit_omuln(b, powers.powers[0].first, ctx, on(b.bit("alpha", 0)), t, "beta", "gamma", "delta");
  }
  for (unsigned i = 1; i < L; ++i)
    emit_omuln(b, powers.powers[i].first, ctx, on(b.bit("alpha", i)), t, "beta", "gamma",
               "delta");
}

// ---- Register layouts ----

RegisterMap expn_layout(unsigned K, unsigned L, Variant v, std::size_t* total_out) {
  RegisterMap regs;
  QubitId next = 0;
  auto add = [&](const std::string& name, unsigned width) {
    std::vector<QubitId> qs(width);
    for (unsigned i = 0; i < width; ++i) qs[i] = next++;
    regs[name] = std::move(qs);
  };
  add("alpha", L);
  add("beta", K);
  add("gamma", K);
  add("select", 1);
  add("delta", K);
  VariantTraits t = traits_for(v);
  if (t.and_bit) add("sigma", 1);
  if (t.muxfa_scratch) add("tau", 1);
  if (t.compare_in_place) add("eta", K - 1);
  if (total_out) *total_out = next;
  return regs;
}

RegisterMap muln_layout(unsigned K, Variant v, std::size_t* total_out) {
  RegisterMap regs;
  QubitId next = 0;
  auto add = [&](const std::string& name, unsigned width) {
    std::vector<QubitId> qs(width);
    for (unsigned i = 0; i < width; ++i) qs[i] = next++;
    regs[name] = std::move(qs);
  };
  add("beta", K);
  add("gamma", K);
  add("select", 1);
  add("delta", K);
  add("enable", 1);
  VariantTraits t = traits_for(v);
  if (t.and_bit) add("sigma", 1);
  if (t.muxfa_scratch) add("tau", 1);
  if (t.compare_in_place) add("eta", K - 1);
  if (total_out) *total_out = next;
  return regs;
}

std::vector<RegisterPredicate> scratch_zero_preds(const RegisterMap& regs,
                                                  std::initializer_list<const char*> names) {
  std::vector<RegisterPredicate> out;
  for (const char* n : names)
    if (regs.count(n)) out.push_back({RegisterPredicate::Kind::Zero, n, 0});
  return out;
}

}  // namespace

// ---- Standalone primitive builders ----

Circuit build_fa(int a) {
  RegisterMap regs{{"b", {0}}, {"c", {1}}, {"carry", {2}}};
  NetBuilder b(3, regs, false);
  if (a == 0) {
    b.g({on(0), on(1)}, 2);
    b.g({on(0)}, 1);
  } else {
    // Adds 1: the carry is b OR c, built before the sum bits flip.
    b.g({on(1)}, 2);
    b.g({}, 1);
    b.g({on(0), on(1)}, 2);
    b.g({on(0)}, 1);
  }
  return std::move(b).take_circuit();
}

namespace {

CellStyle standalone_cell(MuxfaForm form, std::size_t n_enables, std::optional<QubitId> tau) {
  CellStyle cell;
  cell.form = form;
  cell.tau = tau;
  cell.expand_basic = form == MuxfaForm::QuadPrime;
  for (std::size_t i = 0; i < n_enables; ++i)
    cell.enables.push_back(on(static_cast<QubitId>(4 + i)));
  return cell;
}

}  // namespace

Circuit build_muxfa(MuxfaForm form, int a0, int a1, std::size_t n_enables) {
  if (form == MuxfaForm::Prime && n_enables != 0)
    throw CircuitError("muxfa: the Prime form has no enable string");
  std::size_t total = 4 + n_enables + (form == MuxfaForm::DoublePrime ? 1 : 0);
  RegisterMap regs{{"select", {0}}, {"b", {1}}, {"c", {2}}, {"carry", {3}}};
  std::vector<QubitId> en;
  for (std::size_t i = 0; i < n_enables; ++i) en.push_back(static_cast<QubitId>(4 + i));
  if (!en.empty()) regs["enable"] = en;
  std::optional<QubitId> tau;
  if (form == MuxfaForm::DoublePrime) {
    tau = static_cast<QubitId>(4 + n_enables);
    regs["tau"] = {*tau};
  }
  NetBuilder b(total, regs, false);
  emit_muxfa(b, standalone_cell(form, n_enables, tau), a0, a1, 0, 1, 2, 3);
  return std::move(b).take_circuit();
}

Circuit build_muxha(int a0, int a1, std::size_t n_enables) {
  RegisterMap regs{{"select", {0}}, {"b", {1}}, {"c", {2}}};
  std::vector<QubitId> en;
  for (std::size_t i = 0; i < n_enables; ++i) en.push_back(static_cast<QubitId>(3 + i));
  if (!en.empty()) regs["enable"] = en;
  NetBuilder b(3 + n_enables, regs, false);
  CellStyle cell;
  for (QubitId q : en) cell.enables.push_back(on(q));
  emit_muxha(b, cell, a0, a1, 0, 1, 2);
  return std::move(b).take_circuit();
}

Circuit build_madd(std::uint64_t a, std::uint64_t a_prime, unsigned K, std::size_t n_enables) {
  RegisterMap regs;
  std::vector<QubitId> beta(K), gamma(K), en;
  for (unsigned i = 0; i < K; ++i) beta[i] = i;
  for (unsigned i = 0; i < K; ++i) gamma[i] = K + i;
  regs["beta"] = beta;
  regs["gamma"] = gamma;
  regs["select"] = {static_cast<QubitId>(2 * K)};
  for (std::size_t i = 0; i < n_enables; ++i) en.push_back(static_cast<QubitId>(2 * K + 1 + i));
  if (!en.empty()) regs["enable"] = en;
  NetBuilder b(2 * K + 1 + n_enables, regs, false);
  CellStyle cell;
  for (QubitId q : en) cell.enables.push_back(on(q));
  emit_madd(b, cell, a, a_prime, K, 2 * K, beta, gamma);
  return std::move(b).take_circuit();
}

Circuit build_lt(std::uint64_t a, unsigned K) {
  RegisterMap regs;
  std::vector<QubitId> beta(K), ghat(K > 0 ? K - 1 : 0);
  for (unsigned i = 0; i < K; ++i) beta[i] = i;
  for (unsigned i = 0; i + 1 < K; ++i) ghat[i] = K + 1 + i;
  regs["beta"] = beta;
  regs["result"] = {static_cast<QubitId>(K)};
  if (!ghat.empty()) regs["ghat"] = ghat;
  NetBuilder b(2 * K, regs, false);
  emit_lt(b, a, K, beta, K, ghat);
  return std::move(b).take_circuit();
}

Circuit build_xlt(std::uint64_t a, unsigned K, std::size_t n_enables) {
  RegisterMap regs;
  std::vector<QubitId> beta(K), ghat(K > 0 ? K - 1 : 0), en;
  for (unsigned i = 0; i < K; ++i) beta[i] = i;
  QubitId target = K, copy = K + 1;
  for (unsigned i = 0; i + 1 < K; ++i) ghat[i] = K + 2 + i;
  for (std::size_t i = 0; i < n_enables; ++i) en.push_back(static_cast<QubitId>(2 * K + 1 + i));
  regs["beta"] = beta;
  regs["target"] = {target};
  regs["copy"] = {copy};
  if (!ghat.empty()) regs["ghat"] = ghat;
  if (!en.empty()) regs["enable"] = en;
  NetBuilder b(2 * K + 1 + n_enables, regs, false);
  Controls enables;
  for (QubitId q : en) enables.push_back(on(q));
  emit_xlt(b, a, K, beta, target, copy, ghat, enables, false, beta[0]);
  return std::move(b).take_circuit();
}

namespace {

RegisterMap addn_layout(unsigned K, std::size_t n_enables) {
  RegisterMap regs;
  std::vector<QubitId> beta(K), gamma(K), en;
  for (unsigned i = 0; i < K; ++i) beta[i] = i;
  regs["beta"] = beta;
  regs["select"] = {static_cast<QubitId>(K)};
  for (unsigned i = 0; i < K; ++i) gamma[i] = K + 1 + i;
  regs["gamma"] = gamma;
  for (std::size_t i = 0; i < n_enables; ++i) en.push_back(static_cast<QubitId>(2 * K + 1 + i));
  if (!en.empty()) regs["enable"] = en;
  return regs;
}

Controls enable_controls(const RegisterMap& regs) {
  Controls out;
  auto it = regs.find("enable");
  if (it != regs.end())
    for (QubitId q : it->second) out.push_back(on(q));
  return out;
}

}  // namespace

Network build_addn(std::uint64_t a, const ModulusContext& ctx, std::size_t n_enables) {
  if (a >= ctx.N) throw CircuitError("addn: addend must be < N");
  RegisterMap regs = addn_layout(ctx.K, n_enables);
  NetBuilder b(2 * ctx.K + 1 + n_enables, regs, false);
  CellStyle cell;
  cell.enables = enable_controls(regs);
  emit_addn(b, a, ctx, cell.enables, cell, "beta", "gamma", false);
  Network net{std::move(b).take_circuit(), scratch_zero_preds(regs, {"select", "gamma"})};
  net.preconditions.push_back({RegisterPredicate::Kind::LessThan, "beta", ctx.N});
  return net;
}

Network build_oaddn(std::uint64_t a, const ModulusContext& ctx, std::size_t n_enables) {
  if (a >= ctx.N) throw CircuitError("oaddn: addend must be < N");
  RegisterMap regs = addn_layout(ctx.K, n_enables);
  NetBuilder b(2 * ctx.K + 1 + n_enables, regs, false);
  CellStyle cell;
  cell.enables = enable_controls(regs);
  VariantTraits t;  // plain enhanced assembly
  emit_oaddn(b, a, ctx, cell.enables, t, cell, "beta", "gamma");
  Network net{std::move(b).take_circuit(), scratch_zero_preds(regs, {"select", "gamma"})};
  net.preconditions.push_back({RegisterPredicate::Kind::LessThan, "beta", ctx.N});
  return net;
}

Circuit build_emul(std::uint64_t a, unsigned K, std::size_t n_enables) {
  RegisterMap regs;
  std::vector<QubitId> gamma(K), en;
  regs["source"] = {0};
  for (unsigned i = 0; i < K; ++i) gamma[i] = 1 + i;
  regs["gamma"] = gamma;
  for (std::size_t i = 0; i < n_enables; ++i) en.push_back(static_cast<QubitId>(K + 1 + i));
  if (!en.empty()) regs["enable"] = en;
  NetBuilder b(K + 1 + n_enables, regs, false);
  Controls ctrls;
  for (QubitId q : en) ctrls.push_back(on(q));
  ctrls.push_back(on(0));
  for (unsigned i = 0; i < K; ++i)
    if ((a >> i) & 1) b.g(ctrls, gamma[i]);
  return std::move(b).take_circuit();
}

Circuit build_xor(unsigned width, std::size_t n_enables) {
  RegisterMap regs;
  std::vector<QubitId> alpha(width), beta(width), en;
  for (unsigned i = 0; i < width; ++i) alpha[i] = i;
  for (unsigned i = 0; i < width; ++i) beta[i] = width + i;
  regs["alpha"] = alpha;
  regs["beta"] = beta;
  for (std::size_t i = 0; i < n_enables; ++i) en.push_back(static_cast<QubitId>(2 * width + i));
  if (!en.empty()) regs["enable"] = en;
  NetBuilder b(2 * width + n_enables, regs, false);
  for (unsigned i = 0; i < width; ++i) {
    Controls ctrls;
    for (QubitId q : en) ctrls.push_back(on(q));
    ctrls.push_back(on(alpha[i]));
    b.g(std::move(ctrls), beta[i]);
  }
  return std::move(b).take_circuit();
}

Network build_muln(std::uint64_t a, const ModulusContext& ctx, const NetworkConfig& cfg) {
  RegisterMap regs = muln_layout(ctx.K, cfg.variant, nullptr);
  std::size_t total = 0;
  for (const auto& [name, qs] : regs) total += qs.size();
  NetBuilder b(total, regs, false);
  emit_muln(b, a % ctx.N, ctx, on(b.bit("enable", 0)), traits_for(cfg.variant), "beta", "gamma",
            "delta");
  Network net{std::move(b).take_circuit(),
              scratch_zero_preds(regs, {"gamma", "select", "delta", "sigma", "tau", "eta"})};
  net.preconditions.push_back({RegisterPredicate::Kind::LessThan, "beta", ctx.N});
  return net;
}

Network build_omuln(std::uint64_t a, const ModulusContext& ctx, const NetworkConfig& cfg) {
  if (std::gcd(a % ctx.N, ctx.N) != 1)
    throw CircuitError("omuln: gcd(a, N) must be 1 for the inverse to exist");
  RegisterMap regs = muln_layout(ctx.K, cfg.variant, nullptr);
  std::size_t total = 0;
  for (const auto& [name, qs] : regs) total += qs.size();
  NetBuilder b(total, regs, false);
  emit_omuln(b, a % ctx.N, ctx, on(b.bit("enable", 0)), traits_for(cfg.variant), "beta", "gamma",
             "delta");
  Network net{std::move(b).take_circuit(),
              scratch_zero_preds(regs, {"gamma", "select", "delta", "sigma", "tau", "eta"})};
  net.preconditions.push_back({RegisterPredicate::Kind::LessThan, "beta", ctx.N});
  return net;
}

Network build_expn(std::uint64_t x, const ModulusContext& ctx, unsigned L,
                   const NetworkConfig& cfg) {
  if (L < 1) throw CircuitError("expn: L must be >= 1");
  std::size_t total = 0;
  RegisterMap regs = expn_layout(ctx.K, L, cfg.variant, &total);
  NetBuilder b(total, regs, false);
  emit_expn(b, x, ctx, L, cfg);
  Network net{std::move(b).take_circuit(),
              scratch_zero_preds(regs, {"beta", "gamma", "select", "delta", "sigma", "tau",
                                        "eta"})};
  return net;
}

CostVector count_expn(std::uint64_t x, const ModulusContext& ctx, unsigned L,
                      const NetworkConfig& cfg) {
  std::size_t total = 0;
  RegisterMap regs = expn_layout(ctx.K, L, cfg.variant, &total);
  NetBuilder b(total, regs, true);
  emit_expn(b, x, ctx, L, cfg);
  return std::move(b).take_counts();
}

PrecomputedPowers classical_precompute(std::uint64_t x, const ModulusContext& ctx, unsigned L) {
  ModulusContext check(ctx.N, ctx.K, x % ctx.N);
  check.require_invertible_base();
  PrecomputedPowers out;
  std::uint64_t p = x % ctx.N;
  std::uint64_t p_inv = modinv(p, ctx.N);  // one Euclid call; the rest squares
  for (unsigned i = 0; i < L; ++i) {
    out.powers.emplace_back(p, p_inv);
    p = mulmod(p, p, ctx.N);
    p_inv = mulmod(p_inv, p_inv, ctx.N);
  }
  return out;
}

std::vector<std::uint64_t> doubling_table(std::uint64_t a, const ModulusContext& ctx) {
  std::vector<std::uint64_t> out(ctx.K);
  std::uint64_t v = a % ctx.N;
  for (unsigned j = 0; j < ctx.K; ++j) {
    out[j] = v;
    v = v * 2 >= ctx.N ? v * 2 - ctx.N : v * 2;
  }
  return out;
}

}  // namespace qfn
