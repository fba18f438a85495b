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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfn/arith_networks.hpp"
#include "qfn/cost_analysis.hpp"
#include "qfn/minimal_space.hpp"
#include "qfn/numtheory.hpp"
#include "qfn/rng.hpp"
#include "qfn/serialize.hpp"
#include "qfn/shor_demo.hpp"
#include "qfn/simulator.hpp"

namespace {

constexpr const char* kVersion = "qfn 0.1.0";

std::uint64_t resolve_seed(std::uint64_t cli_seed, bool seed_set) {
  if (seed_set) return cli_seed;
  if (const char* env = std::getenv("QFN_SEED")) return std::strtoull(env, nullptr, 0);
  return qfn::kDefaultSeed;
}

void emit_manifest(const std::string& command, const nlohmann::json& params, std::uint64_t seed,
                   const std::vector<std::string>& outputs, const std::string& manifest_path) {
  nlohmann::json m;
  m["command"] = command;
  m["parameters"] = params;
  m["seed"] = seed;
  m["version"] = kVersion;
  m["outputs"] = outputs;
  if (manifest_path.empty()) {
    std::cerr << "manifest " << m.dump() << "\n";
  } else {
    std::ofstream f(manifest_path);
    f << m.dump(2) << "\n";
  }
}

struct CheckSink {
  bool enabled = false;
  int failures = 0;

  template <typename T, typename U>
  void expect(const std::string& what, const T& got, const U& want) {
    if (!enabled) return;
    if (got == want) {
      std::cout << "check " << what << ": ok\n";
    } else {
      std::ostringstream g, w;
      g << got;
      w << want;
      std::cout << "check " << what << ": FAIL (got " << g.str() << ", want " << w.str() << ")\n";
      ++failures;
    }
  }
};

void print_count_report(const qfn::Circuit& c, const std::string& format) {
  qfn::CostVector v = qfn::count_gates(c);
  qfn::PhaseOpCount ph = qfn::count_phase_ops(c);
  if (format == "records") {
    for (std::size_t k = 0; k <= v.max_arity(); ++k)
      std::cout << "record arity=" << k << " gates=" << v.at(k).str()
                << " pulses=" << (v.at(k) * qfn::Rational(k == 0 ? 1 : 2 * (std::int64_t)k + 3)).str()
                << "\n";
    if (ph.rotations) std::cout << "record rotations=" << ph.rotations << "\n";
    if (ph.conditional_phases)
      std::cout << "record cphases=" << ph.conditional_phases << "\n";
    std::cout << "record total_pulses=" << qfn::circuit_pulses(c).str() << "\n";
    return;
  }
  std::cout << "arity  gates  pulses\n";
  for (std::size_t k = 0; k <= v.max_arity(); ++k)
    std::cout << k << "      " << v.at(k).str() << "      "
              << (v.at(k) * qfn::Rational(k == 0 ? 1 : 2 * (std::int64_t)k + 3)).str() << "\n";
  if (ph.rotations || ph.conditional_phases)
    std::cout << "rotations " << ph.rotations << ", conditional phases " << ph.conditional_phases
              << "\n";
  std::cout << "gate vector " << v.str() << "\n";
  std::cout << "total pulses " << qfn::circuit_pulses(c).str() << "\n";
}

std::uint64_t parse_u64(const std::string& s) { return std::strtoull(s.c_str(), nullptr, 0); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversible-network compiler for modular exponentiation, with ion-trap pulse "
               "accounting"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags (--seed, --jobs, ...) after the subcommand

  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "write the run manifest to this path (JSON)");

  std::uint64_t seed = 0;
  bool seed_set = false;
  app.add_option("--seed", seed, "random seed (overrides QFN_SEED)")
      ->each([&](const std::string&) { seed_set = true; });

  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for sweeps and trials");

  std::string format = "table";
  app.add_option("--format", format, "output format: table|records")
      ->check(CLI::IsMember({"table", "records"}));

  // ---- build ----
  auto* build = app.add_subcommand("build", "emit a network as a circuit document");
  std::string network, out_path, variant_str = "e2k1";
  std::uint64_t p_a = 0, p_a1 = 0, p_x = 0, p_N = 0;
  unsigned p_K = 4, p_L = 0;
  std::size_t p_enables = 0;
  int p_fa = 0, p_a0 = 0, p_a1b = 0;
  std::string muxfa_form = "plain", expn15_style = "standard";
  bool no_first_mul_opt = false;
  build->add_option("network", network,
                    "fa|muxfa|muxha|madd|lt|xlt|addn|oaddn|emul|xor|muln|omuln|expn|add-ltr|"
                    "oaddn-min|expn-min|qft|expn15|mod2k")
      ->required();
  build->add_option("--a", p_a, "classical addend / multiplier");
  build->add_option("--a2", p_a1, "second classical addend (madd)");
  build->add_option("--bit", p_fa, "classical bit (fa)");
  build->add_option("--a0", p_a0, "multiplexed addend for select=0");
  build->add_option("--a1", p_a1b, "multiplexed addend for select=1");
  build->add_option("--x", p_x, "base");
  build->add_option("--N", p_N, "modulus");
  build->add_option("--K", p_K, "register width");
  build->add_option("--L", p_L, "input register width");
  build->add_option("--enables", p_enables, "enable string length");
  build->add_option("--variant", variant_str, "e2k1|e2k2|b2k3|b2k2|b2k1|s3k1|min-k1");
  build->add_option("--muxfa-form", muxfa_form, "prime|plain|double|triple|quad");
  build->add_option("--style", expn15_style, "expn15: standard|drop-final-not|custom");
  build->add_flag("--no-first-mul-opt", no_first_mul_opt,
                  "keep the plain OMULN as the first multiplier");
  build->add_option("--out", out_path, "write the circuit document here");

  // ---- simulate ----
  auto* sim = app.add_subcommand("simulate", "run a circuit document");
  std::string sim_path, sweep_reg, sim_registers;
  std::vector<std::string> sets;
  bool sim_vector = false;
  std::string dist_register;
  sim->add_option("--circuit", sim_path, "circuit document")->required();
  sim->add_option("--set", sets, "register assignment reg=value (repeatable)");
  sim->add_option("--sweep", sweep_reg, "sweep this register over all values");
  sim->add_option("--registers", sim_registers, "comma-separated registers to print");
  sim->add_flag("--vector", sim_vector, "state-vector mode (required for phase gates)");
  sim->add_option("--distribution", dist_register, "print the marginal of this register");

  // ---- count ----
  auto* count = app.add_subcommand("count", "closed-form and measured cost tables");
  std::string count_config = "e2k1", count_case = "avg";
  bool count_all = false, count_check = false;
  unsigned c_K = 4, c_L = 8;
  std::size_t c_trials = 0;
  count->add_option("--config", count_config, "e2k1|e2k2|b2k3|b2k2|b2k1|s3k1|min-k1");
  count->add_option("--case", count_case, "avg|worst");
  count->add_flag("--all", count_all, "print the summary table of leading coefficients");
  count->add_option("--K", c_K, "modulus width");
  count->add_option("--L", c_L, "input width");
  count->add_option("--measure", c_trials, "also measure the mean over this many random (N,x)");
  count->add_flag("--check", count_check, "verify tabulated values; nonzero exit on mismatch");

  // ---- factor ----
  auto* factor = app.add_subcommand("factor", "end-to-end order finding and factor extraction");
  std::uint64_t f_N = 15, f_x = 7;
  unsigned f_L = 2;
  std::size_t f_trials = 1024;
  std::string f_expn = "lookup", f_style = "standard", f_variant = "e2k1";
  bool f_check = false;
  factor->add_option("--N", f_N, "number to factor");
  factor->add_option("--x", f_x, "base");
  factor->add_option("--L", f_L, "input register width");
  factor->add_option("--trials", f_trials, "number of measurement trials");
  factor->add_option("--expn", f_expn, "lookup|general|min");
  factor->add_option("--style", f_style, "lookup style: standard|drop-final-not|custom");
  factor->add_option("--variant", f_variant, "general-expn variant");
  factor->add_flag("--check", f_check, "verify the N=15 demo invariants");

  // ---- qft-test ----
  auto* qft_test = app.add_subcommand("qft-test", "FT demonstration on a mod-2^K input");
  unsigned q_L = 2, q_K = 1;
  bool q_check = false;
  qft_test->add_option("--L", q_L, "input register width");
  qft_test->add_option("--K", q_K, "output register width");
  qft_test->add_flag("--check", q_check, "verify the demo pulse count and spectrum");

  // ---- selfcheck ----
  auto* selfcheck = app.add_subcommand("selfcheck", "quick verification of pinned values");

  CLI11_PARSE(app, argc, argv);

  const std::uint64_t run_seed = resolve_seed(seed, seed_set);
  std::vector<std::string> outputs;
  int exit_code = 0;

  try {
    if (*build) {
      qfn::Circuit circuit = [&]() -> qfn::Circuit {
        using namespace qfn;
        auto ctx = [&] { return ModulusContext(p_N, p_K ? p_K : bit_width_of(p_N), p_x % p_N); };
        auto addctx = [&] { return ModulusContext(p_N, p_K ? p_K : bit_width_of(p_N)); };
        NetworkConfig cfg;
        if (variant_str != "min-k1") cfg.variant = variant_from_name(variant_str);
        cfg.first_mul_optimized = !no_first_mul_opt;
        if (network == "fa") return build_fa(p_fa);
        if (network == "muxfa") {
          MuxfaForm form = muxfa_form == "prime"    ? MuxfaForm::Prime
                           : muxfa_form == "plain"  ? MuxfaForm::Plain
                           : muxfa_form == "double" ? MuxfaForm::DoublePrime
                           : muxfa_form == "triple" ? MuxfaForm::TriplePrime
                                                    : MuxfaForm::QuadPrime;
          return build_muxfa(form, p_a0, p_a1b, p_enables);
        }
        if (network == "muxha") return build_muxha(p_a0, p_a1b, p_enables);
        if (network == "madd") return build_madd(p_a, p_a1, p_K, p_enables);
        if (network == "lt") return build_lt(p_a, p_K);
        if (network == "xlt") return build_xlt(p_a, p_K, p_enables);
        if (network == "addn") return build_addn(p_a, addctx(), p_enables).circuit;
        if (network == "oaddn") return build_oaddn(p_a, addctx(), p_enables).circuit;
        if (network == "emul") return build_emul(p_a, p_K, p_enables);
        if (network == "xor") return build_xor(p_K, p_enables);
        if (network == "muln") return build_muln(p_a, ctx(), cfg).circuit;
        if (network == "omuln") return build_omuln(p_a, ctx(), cfg).circuit;
        if (network == "expn") {
          unsigned L = p_L ? p_L : 2 * (p_K ? p_K : bit_width_of(p_N));
          if (variant_str == "min-k1") return build_expn_min(p_x, ctx(), L).circuit;
          return build_expn(p_x, ctx(), L, cfg).circuit;
        }
        if (network == "add-ltr") return build_add_ltr(p_a, p_K, p_enables);
        if (network == "oaddn-min") return build_oaddn_min(p_a, addctx(), p_enables).circuit;
        if (network == "expn-min") return build_expn_min(p_x, ctx(), p_L ? p_L : 2 * p_K).circuit;
        if (network == "qft") return build_qft(p_L ? p_L : 2);
        if (network == "expn15") {
          Expn15Style style = expn15_style == "standard"         ? Expn15Style::Standard
                              : expn15_style == "drop-final-not" ? Expn15Style::DropFinalNot
                                                                 : Expn15Style::CustomGates;
          return build_expn15(p_x ? p_x : 7, style, p_L ? p_L : 2);
        }
        if (network == "mod2k") return build_mod2k(p_L ? p_L : 2, p_K);
        throw CLI::ValidationError("unknown network '" + network + "'");
      }();

      std::cout << "network " << network << " qubits " << circuit.qubit_count() << "\n";
      print_count_report(circuit, format);
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        qfn::serialize(circuit, f);
        outputs.push_back(out_path);
      }
      nlohmann::json params{{"network", network}, {"variant", variant_str}, {"K", p_K},
                            {"L", p_L},           {"N", p_N},               {"x", p_x},
                            {"a", p_a}};
      emit_manifest("build", params, run_seed, outputs, manifest_path);
    } else if (*sim) {
      std::ifstream f(sim_path);
      if (!f) throw std::runtime_error("cannot open " + sim_path);
      qfn::Circuit circuit = qfn::parse_circuit(f);
      qfn::RegisterMap out_layout = qfn::final_layout(circuit);

      auto apply_sets = [&](qfn::BasisState& s) {
        for (const auto& kv : sets) {
          auto eq = kv.find('=');
          if (eq == std::string::npos) throw std::runtime_error("bad --set " + kv);
          s.write(circuit.reg(kv.substr(0, eq)), parse_u64(kv.substr(eq + 1)));
        }
      };

      if (sim_vector || !dist_register.empty()) {
        qfn::BasisState in(circuit.qubit_count());
        apply_sets(in);
        std::uint64_t index = 0;
        for (std::size_t q = 0; q < circuit.qubit_count(); ++q)
          if (in.get(static_cast<qfn::QubitId>(q))) index |= 1ULL << q;
        qfn::StateVector psi =
            qfn::run_statevector(circuit, qfn::StateVector::basis(circuit.qubit_count(), index));
        const std::string reg = dist_register.empty() ? "alpha" : dist_register;
        qfn::MeasurementDistribution d = qfn::distribution(psi, circuit, reg);
        for (std::uint64_t p = 0; p < d.probabilities.size(); ++p)
          std::cout << "pattern " << p << " probability " << d.probabilities[p] << "\n";
      } else if (!sweep_reg.empty()) {
        const auto& reg = circuit.reg(sweep_reg);
        qfn::CompiledBasisCircuit compiled(circuit);
        const std::uint64_t count = 1ULL << reg.size();
        std::vector<std::uint64_t> words(count);
        auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
          for (std::uint64_t v = lo; v < hi; ++v) {
            qfn::BasisState in(circuit.qubit_count());
            apply_sets(in);
            in.write(reg, v);
            words[v] = compiled.run(in.words()[0]);
          }
        };
        if (jobs <= 1 || count < 64) {
          run_range(0, count);
        } else {
          std::vector<std::thread> workers;
          std::uint64_t chunk = (count + jobs - 1) / jobs;
          for (unsigned w = 0; w < jobs; ++w)
            workers.emplace_back(run_range, w * chunk, std::min<std::uint64_t>(count, (w + 1) * chunk));
          for (auto& t : workers) t.join();
        }
        for (std::uint64_t v = 0; v < count; ++v) {
          qfn::BasisState o(circuit.qubit_count());
          for (std::size_t q = 0; q < circuit.qubit_count(); ++q)
            o.set(static_cast<qfn::QubitId>(q), (words[v] >> q) & 1);
          std::cout << sweep_reg << "=" << v << " ->";
          for (const auto& [name, qubits] : out_layout)
            std::cout << " " << name << "=" << o.read(qubits);
          std::cout << "\n";
        }
      } else {
        qfn::BasisState in(circuit.qubit_count());
        apply_sets(in);
        qfn::BasisState out = qfn::run_basis(circuit, in);
        for (const auto& [name, qubits] : out_layout)
          std::cout << name << "=" << out.read(qubits) << "\n";
      }
      emit_manifest("simulate", {{"circuit", sim_path}}, run_seed, outputs, manifest_path);
    } else if (*count) {
      CheckSink check;
      check.enabled = count_check;
      qfn::CountCase cc =
          count_case == "worst" ? qfn::CountCase::Worst : qfn::CountCase::Average;
      if (count_all) {
        std::cout << "coefficient of L*K^2, average case\n";
        std::cout << "scratch  basic gates        pulses  enhanced gates        pulses\n";
        auto row = [&](const char* label, std::optional<qfn::CostConfig> basic,
                       std::optional<qfn::CostConfig> enh) {
          std::cout << label << "  ";
          auto cell = [&](std::optional<qfn::CostConfig> cfg) {
            if (!cfg) {
              std::cout << "  -";
              return;
            }
            auto lead = qfn::leading_coefficients(*cfg, qfn::CountCase::Average);
            std::cout << "[";
            for (std::size_t i = 0; i < lead.gates.size(); ++i)
              std::cout << (i ? "," : "") << lead.gates[i];
            std::cout << "] " << lead.pulses << "  ";
          };
          cell(basic);
          cell(enh);
          std::cout << "\n";
        };
        row("2K+1", qfn::CostConfig::B2K1, qfn::CostConfig::E2K1);
        row("2K+2", qfn::CostConfig::B2K2, qfn::CostConfig::E2K2);
        row("2K+3", qfn::CostConfig::B2K3, std::nullopt);
        row("3K+1", std::nullopt, qfn::CostConfig::S3K1);

        check.expect("e2k1 avg pulse coefficient",
                     qfn::leading_coefficients(qfn::CostConfig::E2K1, cc).pulses, 198);
        check.expect("e2k2 avg pulse coefficient",
                     qfn::leading_coefficients(qfn::CostConfig::E2K2, cc).pulses, 186);
        check.expect("b2k3 avg pulse coefficient",
                     qfn::leading_coefficients(qfn::CostConfig::B2K3, cc).pulses, 206);
        check.expect("b2k2 avg pulse coefficient",
                     qfn::leading_coefficients(qfn::CostConfig::B2K2, cc).pulses, 224);
        check.expect("b2k1 avg pulse coefficient",
                     qfn::leading_coefficients(qfn::CostConfig::B2K1, cc).pulses, 373);
      } else {
        qfn::CostConfig cfg = qfn::cost_config_from_name(count_config);
        qfn::FormulaResult r = qfn::formula_result(cfg, cc, c_K, c_L);
        std::cout << "config " << count_config << " case " << count_case << " K " << c_K << " L "
                  << c_L << (r.leading_only ? " (leading order)" : "") << "\n";
        if (r.gate_vector) std::cout << "gates " << r.gate_vector->str() << "\n";
        std::cout << "pulses " << r.pulse_total.str() << "\n";
        if (c_trials > 0) {
          qfn::EmpiricalAverage m =
              qfn::empirical_average(cfg, c_K, c_L, c_trials, run_seed, jobs);
          std::cout << "measured mean gates " << m.mean_counts.str() << "\n";
          std::cout << "measured mean pulses " << m.mean_pulses.str() << " over " << m.trials
                    << " trials\n";
        }
      }
      if (count_check) {
        check.expect("e2k1 avg K=4 L=8",
                     qfn::formula_pulses(qfn::CostConfig::E2K1, qfn::CountCase::Average, 4, 8),
                     qfn::Rational(15284));
        check.expect("e2k2 avg K=4 L=8",
                     qfn::formula_pulses(qfn::CostConfig::E2K2, qfn::CountCase::Average, 4, 8),
                     qfn::Rational(14878));
        check.expect("min-k1 avg K=4 L=2",
                     qfn::formula_pulses(qfn::CostConfig::MinSpace, qfn::CountCase::Average, 4, 2),
                     qfn::Rational(1406));
        std::cout << "report-only: e2k1 avg K=432 L=864 pulses "
                  << qfn::formula_pulses(qfn::CostConfig::E2K1, qfn::CountCase::Average, 432, 864)
                         .str()
                  << "\n";
        exit_code = check.failures ? 1 : 0;
      }
      emit_manifest("count",
                    {{"config", count_config}, {"case", count_case}, {"K", c_K}, {"L", c_L}},
                    run_seed, outputs, manifest_path);
    } else if (*factor) {
      qfn::ExperimentOptions opts;
      opts.L = f_L;
      opts.trials = f_trials;
      opts.seed = run_seed;
      if (f_expn == "lookup") {
        opts.expn = qfn::ExperimentOptions::Expn::Lookup15;
        opts.lookup_style = f_style == "drop-final-not" ? qfn::Expn15Style::DropFinalNot
                            : f_style == "custom"       ? qfn::Expn15Style::CustomGates
                                                        : qfn::Expn15Style::Standard;
      } else if (f_expn == "general") {
        opts.expn = qfn::ExperimentOptions::Expn::General;
        opts.cfg.variant = qfn::variant_from_name(f_variant);
      } else {
        opts.expn = qfn::ExperimentOptions::Expn::MinSpace;
      }
      (void)jobs;  // trials are sampled from one exact distribution
      qfn::ExperimentReport rep = qfn::run_factoring_experiment(f_N, f_x, opts);

      if (format == "records") {
        for (std::size_t i = 0; i < rep.trials.size(); ++i) {
          const auto& t = rep.trials[i];
          std::cout << "record trial=" << i << " y=" << t.y << " r=" << t.candidate_r
                    << " success=" << (t.success ? 1 : 0);
          if (t.success) std::cout << " factors=" << t.f1 << "x" << t.f2;
          if (!t.note.empty()) std::cout << " note=\"" << t.note << "\"";
          std::cout << "\n";
        }
      } else {
        std::size_t show = std::min<std::size_t>(rep.trials.size(), 10);
        for (std::size_t i = 0; i < show; ++i) {
          const auto& t = rep.trials[i];
          std::cout << "trial " << i << ": y=" << t.y;
          if (t.candidate_r) std::cout << " r=" << t.candidate_r;
          if (t.success) std::cout << " factors " << t.f1 << " * " << t.f2;
          if (!t.note.empty()) std::cout << " (" << t.note << ")";
          std::cout << "\n";
        }
        if (rep.trials.size() > show)
          std::cout << "... (" << rep.trials.size() - show << " more trials)\n";
      }
      double rate = rep.trials.empty() ? 0.0
                                       : static_cast<double>(rep.successes) /
                                             static_cast<double>(rep.trials.size());
      std::cout << "successes " << rep.successes << "/" << rep.trials.size() << " (rate " << rate
                << ")\n";
      std::cout << "circuit pulses " << rep.circuit_pulses.str() << " seed " << rep.seed << "\n";
      if (f_check && f_N == 15 && f_x == 7 && f_L == 2) {
        int fails = 0;
        if (!(rate > 0.44 && rate < 0.56)) {
          std::cout << "check recovery rate ~ 1/2: FAIL\n";
          ++fails;
        } else {
          std::cout << "check recovery rate ~ 1/2: ok\n";
        }
        exit_code = fails ? 1 : exit_code;
      }
      emit_manifest("factor",
                    {{"N", f_N}, {"x", f_x}, {"L", f_L}, {"trials", f_trials}, {"expn", f_expn}},
                    run_seed, outputs, manifest_path);
    } else if (*qft_test) {
      qfn::QftTestReport rep = qfn::run_qft_test(q_L, q_K);
      std::cout << "qft-test L=" << q_L << " K=" << q_K << " pulses "
                << rep.total_pulses.str() << "\n";
      for (std::uint64_t y = 0; y < rep.y_distribution.probabilities.size(); ++y)
        if (rep.y_distribution.probabilities[y] > 1e-12)
          std::cout << "y=" << y << " probability " << rep.y_distribution.probabilities[y]
                    << "\n";
      if (q_check) {
        int fails = 0;
        const std::uint64_t step = 1ULL << (q_L - q_K);
        for (std::uint64_t y = 0; y < rep.y_distribution.probabilities.size(); ++y) {
          double p = rep.y_distribution.probabilities[y];
          double want = (y % step == 0) ? 1.0 / static_cast<double>(1ULL << q_K) : 0.0;
          if (std::abs(p - want) > 1e-10) ++fails;
        }
        if (q_L == 2 && q_K == 1 && rep.total_pulses != qfn::Rational(13)) ++fails;
        std::cout << (fails ? "check spectrum/pulses: FAIL\n" : "check spectrum/pulses: ok\n");
        exit_code = fails ? 1 : exit_code;
      }
      emit_manifest("qft-test", {{"L", q_L}, {"K", q_K}}, run_seed, outputs, manifest_path);
    } else if (*selfcheck) {
      CheckSink check;
      check.enabled = true;
      using namespace qfn;
      check.expect("fa(0) gate vector", count_gates(build_fa(0)).str(), std::string("[0,1,1]"));
      check.expect("expn15(7) pulses", circuit_pulses(build_expn15(7, Expn15Style::Standard)),
                   Rational(34));
      check.expect("expn15(7) custom pulses",
                   circuit_pulses(build_expn15(7, Expn15Style::CustomGates)), Rational(30));
      check.expect("qft L=2 pulses", circuit_pulses(build_qft(2)), Rational(6));
      check.expect("pulse formula e2k1 K=4 L=8",
                   formula_pulses(CostConfig::E2K1, CountCase::Average, 4, 8), Rational(15284));
      {
        ModulusContext ctx(15, 4, 7);
        Network net = build_expn(7, ctx, 2, NetworkConfig{});
        CompiledBasisCircuit compiled(net.circuit);
        std::string got, want = "1,7,4,13";
        RegisterMap layout = final_layout(net.circuit);
        for (std::uint64_t a = 0; a < 4; ++a) {
          BasisState in(net.circuit.qubit_count());
          in.write(net.circuit.reg("alpha"), a);
          std::uint64_t word = compiled.run(in.words()[0]);
          BasisState out(net.circuit.qubit_count());
          for (std::size_t q = 0; q < net.circuit.qubit_count(); ++q)
            out.set(static_cast<QubitId>(q), (word >> q) & 1);
          got += (a ? "," : "") + std::to_string(out.read(layout.at("beta")));
        }
        check.expect("expn(7,15) sweep", got, want);
      }
      std::cout << (check.failures ? "selfcheck: FAIL\n" : "selfcheck: ok\n");
      exit_code = check.failures ? 1 : 0;
      emit_manifest("selfcheck", {}, run_seed, outputs, manifest_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
