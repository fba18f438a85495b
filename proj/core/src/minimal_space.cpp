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

#include "qfn/minimal_space.hpp"

#include <numeric>

#include "net_builder.hpp"
#include "qfn/numtheory.hpp"

namespace qfn {

namespace {

using detail::Controls;
using detail::NetBuilder;
using detail::with;

// Adds the single classical bit a_i to the sub-register beta[i..K-1] with
// overflow into `carry`: flip the top on an all-ones run first, then work
// down, and flip beta[i] last.  Control strings grow to K-i plus enables.
void emit_ltr_bit(NetBuilder& b, const Controls& base, unsigned i, unsigned K,
                  const std::vector<QubitId>& beta, std::optional<QubitId> carry) {
  if (carry) {
    Controls c = base;
    for (unsigned j = i; j < K; ++j) c.push_back(on(beta[j]));
    b.g(std::move(c), *carry);
  }
  for (unsigned j = K; j-- > i + 1;) {
    Controls c = base;
    for (unsigned m = i; m < j; ++m) c.push_back(on(beta[m]));
    b.g(std::move(c), beta[j]);
  }
  b.g(base, beta[i]);
}

// (carry, beta) += a as a (K+1)-bit sum.
void emit_add_ltr(NetBuilder& b, std::uint64_t a, unsigned K, const Controls& enables,
                  const std::vector<QubitId>& beta, QubitId carry) {
  for (unsigned i = 0; i < K; ++i)
    if ((a >> i) & 1) emit_ltr_bit(b, enables, i, K, beta, carry);
}

// In-place multiplexed add mod 2^K: += u when sel = 0, += v when sel = 1.
// Cells where only one addend has the bit use the select line as an extra
// control; the u-only cells flip it before and after.
void emit_madd_prime(NetBuilder& b, std::uint64_t u, std::uint64_t v, unsigned K,
                     const Controls& enables, QubitId sel, const std::vector<QubitId>& beta) {
  u &= (K == 64) ? ~0ULL : ((1ULL << K) - 1);
  v &= (K == 64) ? ~0ULL : ((1ULL << K) - 1);
  for (unsigned i = 0; i < K; ++i) {
    bool ui = (u >> i) & 1, vi = (v >> i) & 1;
    if (!ui && !vi) continue;
    if (ui && vi) {
      emit_ltr_bit(b, enables, i, K, beta, std::nullopt);
    } else if (vi) {
      emit_ltr_bit(b, with(enables, on(sel)), i, K, beta, std::nullopt);
    } else {
      b.g({}, sel);
      emit_ltr_bit(b, with(enables, on(sel)), i, K, beta, std::nullopt);
      b.g({}, sel);
    }
  }
}

// beta <- b + E&a (mod N) using only the carry qubit as scratch: compare by
// adding 2^K-N+a (the carry records a+b >= N), fix the residue with the
// multiplexed add, then let the final += a overflow the carry away.
void emit_oaddn_min(NetBuilder& b, std::uint64_t a, const ModulusContext& ctx,
                    const Controls& enables, const std::vector<QubitId>& beta, QubitId carry) {
  const std::uint64_t two_k = 1ULL << ctx.K;
  emit_add_ltr(b, two_k - ctx.N + a, ctx.K, enables, beta, carry);
  emit_madd_prime(b, ctx.N - a, two_k - a, ctx.K, enables, carry, beta);
  emit_add_ltr(b, a, ctx.K, enables, beta, carry);
}

void emit_muln_min(NetBuilder& b, std::uint64_t a, const ModulusContext& ctx, ControlSpec enable,
                   const std::string& src, const std::string& dst, QubitId carry) {
  auto dtable = doubling_table(a, ctx);
  for (unsigned i = 0; i < ctx.K; ++i)
    if ((a >> i) & 1) b.g({enable, on(b.bit(src, 0))}, b.bit(dst, i));
  for (unsigned i = 1; i < ctx.K; ++i)
    emit_oaddn_min(b, dtable[i], ctx, {enable, on(b.bit(src, i))}, b.reg(dst), carry);
}

void emit_omuln_min(NetBuilder& b, std::uint64_t a, const ModulusContext& ctx, ControlSpec enable,
                    const std::string& src, const std::string& dst, QubitId carry) {
  std::uint64_t a_inv = modinv(a % ctx.N, ctx.N);
  emit_muln_min(b, a % ctx.N, ctx, enable, src, dst, carry);
  auto m = b.mark();
  emit_muln_min(b, a_inv, ctx, enable, dst, src, carry);
  b.invert_tail(m);
  for (unsigned i = 0; i < ctx.K; ++i) b.g({enable, on(b.bit(dst, i))}, b.bit(src, i));
  for (unsigned i = 0; i < ctx.K; ++i) b.g({enable, on(b.bit(src, i))}, b.bit(dst, i));
}

void emit_expn_min(NetBuilder& b, std::uint64_t x, const ModulusContext& ctx, unsigned L) {
  auto powers = classical_precompute(x, ctx, L);
  QubitId a0 = b.bit("alpha", 0);
  for (unsigned i = 0; i < ctx.K; ++i)
    if ((x >> i) & 1) b.g({on(a0)}, b.bit("beta", i));
  b.g({}, a0);
  b.g({on(a0)}, b.bit("beta", 0));
  b.g({}, a0);
  for (unsigned i = 1; i < L; ++i)
    emit_omuln_min(b, powers.powers[i].first, ctx, on(b.bit("alpha", i)), "beta", "gamma",
                   b.bit("carry", 0));
}

}  // namespace

Circuit build_add_ltr(std::uint64_t a, unsigned K, std::size_t n_enables) {
  RegisterMap regs;
  std::vector<QubitId> beta(K), en;
  for (unsigned i = 0; i < K; ++i) beta[i] = i;
  regs["beta"] = beta;
  regs["carry"] = {static_cast<QubitId>(K)};
  for (std::size_t i = 0; i < n_enables; ++i) en.push_back(static_cast<QubitId>(K + 1 + i));
  if (!en.empty()) regs["enable"] = en;
  NetBuilder b(K + 1 + n_enables, regs, false);
  Controls enables;
  for (QubitId q : en) enables.push_back(on(q));
  emit_add_ltr(b, a, K, enables, beta, K);
  return std::move(b).take_circuit();
}

Circuit build_madd_prime(std::uint64_t a, std::uint64_t a_prime, unsigned K,
                         std::size_t n_enables) {
  RegisterMap regs;
  std::vector<QubitId> beta(K), en;
  for (unsigned i = 0; i < K; ++i) beta[i] = i;
  regs["beta"] = beta;
  regs["select"] = {static_cast<QubitId>(K)};
  for (std::size_t i = 0; i < n_enables; ++i) en.push_back(static_cast<QubitId>(K + 1 + i));
  if (!en.empty()) regs["enable"] = en;
  NetBuilder b(K + 1 + n_enables, regs, false);
  Controls enables;
  for (QubitId q : en) enables.push_back(on(q));
  emit_madd_prime(b, a, a_prime, K, enables, K, beta);
  return std::move(b).take_circuit();
}

Network build_oaddn_min(std::uint64_t a, const ModulusContext& ctx, std::size_t n_enables) {
  if (a >= ctx.N) throw CircuitError("oaddn-min: addend must be < N");
  RegisterMap regs;
  std::vector<QubitId> beta(ctx.K), en;
  for (unsigned i = 0; i < ctx.K; ++i) beta[i] = i;
  regs["beta"] = beta;
  regs["carry"] = {static_cast<QubitId>(ctx.K)};
  for (std::size_t i = 0; i < n_enables; ++i) en.push_back(static_cast<QubitId>(ctx.K + 1 + i));
  if (!en.empty()) regs["enable"] = en;
  NetBuilder b(ctx.K + 1 + n_enables, regs, false);
  Controls enables;
  for (QubitId q : en) enables.push_back(on(q));
  emit_oaddn_min(b, a, ctx, enables, beta, ctx.K);
  Network net{std::move(b).take_circuit(), {{RegisterPredicate::Kind::Zero, "carry", 0}}};
  net.preconditions.push_back({RegisterPredicate::Kind::LessThan, "beta", ctx.N});
  return net;
}

namespace {

RegisterMap expn_min_layout(unsigned K, unsigned L) {
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
  add("carry", 1);
  return regs;
}

}  // namespace

Network build_expn_min(std::uint64_t x, const ModulusContext& ctx, unsigned L) {
  if (L < 1) throw CircuitError("expn-min: L must be >= 1");
  RegisterMap regs = expn_min_layout(ctx.K, L);
  NetBuilder b(L + 2 * ctx.K + 1, regs, false);
  emit_expn_min(b, x, ctx, L);
  Network net{std::move(b).take_circuit(),
              {{RegisterPredicate::Kind::Zero, "beta", 0},
               {RegisterPredicate::Kind::Zero, "gamma", 0},
               {RegisterPredicate::Kind::Zero, "carry", 0}}};
  return net;
}

CostVector count_expn_min(std::uint64_t x, const ModulusContext& ctx, unsigned L) {
  RegisterMap regs = expn_min_layout(ctx.K, L);
  NetBuilder b(L + 2 * ctx.K + 1, regs, true);
  emit_expn_min(b, x, ctx, L);
  return std::move(b).take_counts();
}

}  // namespace qfn
