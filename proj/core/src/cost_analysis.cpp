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

#include "qfn/cost_analysis.hpp"

#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "qfn/minimal_space.hpp"
#include "qfn/rng.hpp"

namespace qfn {

CostConfig cost_config_for(Variant v) {
  switch (v) {
    case Variant::E2K1:
      return CostConfig::E2K1;
    case Variant::E2K2:
      return CostConfig::E2K2;
    case Variant::B2K3:
      return CostConfig::B2K3;
    case Variant::B2K2:
      return CostConfig::B2K2;
    case Variant::B2K1:
      return CostConfig::B2K1;
    case Variant::S3K1:
      return CostConfig::S3K1;
  }
  return CostConfig::E2K1;
}

std::string cost_config_name(CostConfig c) {
  switch (c) {
    case CostConfig::E2K1:
      return "e2k1";
    case CostConfig::E2K2:
      return "e2k2";
    case CostConfig::B2K3:
      return "b2k3";
    case CostConfig::B2K2:
      return "b2k2";
    case CostConfig::B2K1:
      return "b2k1";
    case CostConfig::S3K1:
      return "s3k1";
    case CostConfig::MinSpace:
      return "min-k1";
  }
  return "?";
}

CostConfig cost_config_from_name(const std::string& name) {
  for (CostConfig c : {CostConfig::E2K1, CostConfig::E2K2, CostConfig::B2K3, CostConfig::B2K2,
                       CostConfig::B2K1, CostConfig::S3K1, CostConfig::MinSpace})
    if (cost_config_name(c) == name) return c;
  throw std::invalid_argument("unknown cost config: " + name);
}

namespace {

Rational poly2(std::int64_t c2, std::int64_t c1, std::int64_t c0, unsigned K) {
  std::int64_t k = K;
  return Rational(c2 * k * k + c1 * k + c0);
}

// Exact average gate vectors: (L-1) * per-multiplier polynomial plus the
// short first-multiplier tail [2, K/2 + 1, 0, ...].
CostVector exact_avg_gates(CostConfig config, unsigned K, unsigned L) {
  std::vector<Rational> per;
  switch (config) {
    case CostConfig::E2K1:
      per = {poly2(10, -14, 4, K), poly2(4, 8, -12, K), poly2(17, -36, 22, K), poly2(3, 0, -3, K),
             poly2(2, -4, 2, K)};
      break;
    case CostConfig::E2K2:
      per = {poly2(10, -14, 4, K), poly2(5, 10, -14, K), poly2(19, -34, 21, K),
             poly2(2, -4, 2, K), Rational(0)};
      break;
    case CostConfig::B2K3:
      per = {poly2(10, -14, 4, K), poly2(7, 6, -12, K), poly2(23, -42, 25, K)};
      break;
    case CostConfig::B2K2:
      per = {poly2(10, -14, 4, K), poly2(5, 10, -14, K), poly2(27, -50, 29, K)};
      break;
    case CostConfig::B2K1:
      per = {poly2(10, -14, 4, K), poly2(4, 8, -12, K), poly2(49, -76, 30, K)};
      break;
    default:
      throw std::invalid_argument("no exact average gate form for " + cost_config_name(config));
  }
  CostVector out = CostVector(per).scaled(Rational(L - 1));
  out.add(0, Rational(2));
  out.add(1, Rational(K, 2) + Rational(1));
  return out;
}

Rational exact_avg_pulses(CostConfig config, unsigned K, unsigned L) {
  Rational tail = Rational(5 * static_cast<std::int64_t>(K), 2) + Rational(7);
  Rational lm1(static_cast<std::int64_t>(L) - 1);
  switch (config) {
    case CostConfig::E2K1:
      return lm1 * poly2(198, -270, 93, K) + tail;
    case CostConfig::E2K2:
      return lm1 * poly2(186, -238, 99, K) + tail;
    case CostConfig::B2K3:
      return lm1 * poly2(206, -278, 119, K) + tail;
    case CostConfig::B2K2:
      return lm1 * poly2(224, -314, 137, K) + tail;
    case CostConfig::B2K1:
      return lm1 * poly2(373, -506, 154, K) + tail;
    case CostConfig::MinSpace: {
      std::int64_t k = K;
      Rational per = Rational(7, 6) * Rational(k * k * k * k) +
                     Rational(169, 12) * Rational(k * k * k) + Rational(83, 6) * Rational(k * k) -
                     Rational(97, 12) * Rational(k);
      return lm1 * per + tail;
    }
    default:
      throw std::invalid_argument("no exact pulse form for " + cost_config_name(config));
  }
}

}  // namespace

LeadingCoefficients leading_coefficients(CostConfig config, CountCase cc) {
  if (cc == CountCase::Average) {
    switch (config) {
      case CostConfig::E2K1:
        return {{10, 4, 17, 3, 2}, 198};
      case CostConfig::E2K2:
        return {{10, 5, 19, 2, 0}, 186};
      case CostConfig::B2K3:
        return {{10, 7, 23}, 206};
      case CostConfig::B2K2:
        return {{10, 5, 27}, 224};
      case CostConfig::B2K1:
        return {{10, 4, 49}, 373};
      case CostConfig::S3K1:
        return {{6, 5, 13, 2, 0}, 140};
      default:
        break;
    }
  } else {
    switch (config) {
      case CostConfig::E2K1:
        return {{16, 4, 24, 4, 4}, 256};
      case CostConfig::E2K2:
        return {{16, 8, 24, 4, 0}, 240};
      case CostConfig::B2K3:
        return {{16, 8, 32}, 280};
      case CostConfig::B2K2:
        return {{16, 8, 40}, 316};
      case CostConfig::B2K1:
        return {{16, 4, 76}, 568};
      default:
        break;
    }
  }
  throw std::invalid_argument("no tabled leading coefficients for " + cost_config_name(config));
}

FormulaResult formula_result(CostConfig config, CountCase cc, unsigned K, unsigned L) {
  if (K < 2 || L < 1) throw std::invalid_argument("formula_result: need K >= 2, L >= 1");
  FormulaResult out;
  if (cc == CountCase::Average) {
    switch (config) {
      case CostConfig::E2K1:
      case CostConfig::E2K2:
      case CostConfig::B2K3:
      case CostConfig::B2K2:
      case CostConfig::B2K1:
        out.gate_vector = exact_avg_gates(config, K, L);
        out.pulse_total = exact_avg_pulses(config, K, L);
        return out;
      case CostConfig::MinSpace:
        out.pulse_total = exact_avg_pulses(config, K, L);
        return out;
      case CostConfig::S3K1:
        break;  // leading term only, below
    }
  }
  // Leading-order forms: coefficient * L * K^2.
  LeadingCoefficients lead = leading_coefficients(config, cc);
  Rational lk2(static_cast<std::int64_t>(L) * K * K);
  std::vector<Rational> gv;
  for (auto g : lead.gates) gv.emplace_back(Rational(g) * lk2);
  out.gate_vector = CostVector(gv);
  out.pulse_total = Rational(lead.pulses) * lk2;
  out.leading_only = true;
  return out;
}

Rational formula_pulses(CostConfig config, CountCase cc, unsigned K, unsigned L) {
  return formula_result(config, cc, K, L).pulse_total;
}

Rational add_ltr_avg_pulses(unsigned K, unsigned n_enables) {
  std::int64_t k = K, l = n_enables;
  if (n_enables < 1) throw std::invalid_argument("add_ltr_avg_pulses: need >= 1 enable");
  return Rational(k * k * k, 6) + (Rational(l, 2) + Rational(5, 4)) * Rational(k * k) +
         (Rational(3 * l, 2) + Rational(31, 12)) * Rational(k);
}

Rational madd_prime_avg_pulses(unsigned K, unsigned n_enables) {
  std::int64_t k = K, l = n_enables;
  if (n_enables < 1) throw std::invalid_argument("madd_prime_avg_pulses: need >= 1 enable");
  return Rational(k * k * k, 4) + (Rational(3 * l, 4) + Rational(13, 8)) * Rational(k * k) +
         (Rational(3 * l, 4) + Rational(15, 8)) * Rational(k);
}

Rational oaddn_min_avg_pulses(unsigned K, unsigned n_enables) {
  return Rational(2) * add_ltr_avg_pulses(K, n_enables) + madd_prime_avg_pulses(K, n_enables);
}

EmpiricalAverage empirical_average(CostConfig config, unsigned K, unsigned L, std::size_t trials,
                                   std::uint64_t seed, unsigned jobs) {
  if (trials < 1) throw std::invalid_argument("empirical_average: trials must be >= 1");
  if (K < 2) throw std::invalid_argument("empirical_average: K must be >= 2");
  const std::uint64_t lo = 1ULL << (K - 1), hi = 1ULL << K;

  auto one_trial = [&](std::size_t index) {
    Rng rng(Rng::substream(seed, index));
    for (int attempts = 0; attempts < 100000; ++attempts) {
      std::uint64_t N = lo + rng.below(hi - lo);
      if (N % 2 == 0) continue;
      std::uint64_t x = 1 + rng.below(N - 1);
      if (std::gcd(x, N) != 1) continue;
      ModulusContext ctx(N, K, x);
      if (config == CostConfig::MinSpace) return count_expn_min(x, ctx, L);
      NetworkConfig cfg;
      cfg.variant = variant_from_name(cost_config_name(config));
      return count_expn(x, ctx, L, cfg);
    }
    throw std::runtime_error("empirical_average: no valid (N, x) found for K=" +
                             std::to_string(K));
  };

  std::vector<CostVector> results(trials);
  if (jobs <= 1 || trials < 2) {
    for (std::size_t i = 0; i < trials; ++i) results[i] = one_trial(i);
  } else {
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    for (unsigned w = 0; w < std::min<std::size_t>(jobs, trials); ++w)
      workers.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= trials) return;
          try {
            results[i] = one_trial(i);
          } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!err) err = std::current_exception();
            return;
          }
        }
      });
    for (auto& t : workers) t.join();
    if (err) std::rethrow_exception(err);
  }

  CostVector sum;
  for (const auto& r : results) sum += r;
  EmpiricalAverage out;
  out.mean_counts = sum.scaled(Rational(1, static_cast<std::int64_t>(trials)));
  out.mean_pulses = pulses(out.mean_counts);
  out.trials = trials;
  return out;
}

std::vector<PrimitiveCounts> primitive_count_table(unsigned K_for_lt) {
  std::vector<PrimitiveCounts> table;

  auto add_muxfa = [&](const std::string& name, MuxfaForm form, std::size_t enables) {
    std::vector<CostVector> cases;
    for (int a0 = 0; a0 <= 1; ++a0)
      for (int a1 = 0; a1 <= 1; ++a1) cases.push_back(count_gates(build_muxfa(form, a0, a1, enables)));
    table.push_back({name, CostVector::entrywise_max(cases), CostVector::mean(cases)});
  };
  add_muxfa("muxfa[2]", MuxfaForm::Plain, 2);
  add_muxfa("muxfa[1]", MuxfaForm::Plain, 1);
  add_muxfa("muxfa''[1]", MuxfaForm::DoublePrime, 1);
  add_muxfa("muxfa'''[1]", MuxfaForm::TriplePrime, 1);
  add_muxfa("muxfa''''[2]", MuxfaForm::QuadPrime, 2);

  for (std::size_t enables : {std::size_t{1}, std::size_t{2}}) {
    std::vector<CostVector> cases;
    for (int a0 = 0; a0 <= 1; ++a0)
      for (int a1 = 0; a1 <= 1; ++a1) cases.push_back(count_gates(build_muxha(a0, a1, enables)));
    table.push_back({"muxha[" + std::to_string(enables) + "]", CostVector::entrywise_max(cases),
                     CostVector::mean(cases)});
  }

  {
    std::vector<CostVector> cases;
    for (std::uint64_t a = 0; a < (1ULL << K_for_lt); ++a)
      cases.push_back(count_gates(build_lt(a, K_for_lt)));
    table.push_back({"lt(K=" + std::to_string(K_for_lt) + ")", CostVector::entrywise_max(cases),
                     CostVector::mean(cases)});
  }
  return table;
}

}  // namespace qfn
