// SPDX-License-Identifier: Apache-2.0
// Command-line front end: field tables, encoding, channel corruption,
// decoding with traces, benchmarks, cross-decoder comparison and the
// exhaustive oracle sweep. Every report is JSON on stdout.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rslab/harness.hpp"

namespace {

using rslab::Elem;
using nlohmann::json;

struct CodeArgs {
  int m = 4;
  std::uint32_t modulus = 0;
  int d = 9;
  int l = 1;

  void add_to(CLI::App* app) {
    app->add_option("--m", m, "Field extension degree (GF(2^m))")->check(CLI::Range(2, 16));
    app->add_option("--modulus", modulus, "Primitive polynomial bitmask; 0 selects the default");
    app->add_option("--d", d, "Designed distance");
    app->add_option("--l", l, "First root exponent");
  }
  rslab::CodeSpec spec() const { return rslab::make_code(m, modulus, d, l); }
};

// Accepts decimal, 0x-prefixed hex, or "a^k" / "0" / "1".
Elem parse_elem(const rslab::Field& f, std::string tok) {
  tok.erase(0, tok.find_first_not_of(" \t"));
  tok.erase(tok.find_last_not_of(" \t") + 1);
  if (tok.rfind("a^", 0) == 0) return f.alpha_pow(std::stoll(tok.substr(2)));
  if (tok == "a") return f.alpha_pow(1);
  const unsigned long v = std::stoul(tok, nullptr, 0);
  if (!f.contains(static_cast<Elem>(v))) throw rslab::InvalidParameters("element out of range: " + tok);
  return static_cast<Elem>(v);
}

std::vector<Elem> parse_list(const rslab::Field& f, const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_elem(f, tok));
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

json word_json(const std::vector<Elem>& w) {
  json j = json::array();
  for (Elem x : w) j.push_back(rslab::hex(x));
  return j;
}

json code_json(const rslab::CodeSpec& s) {
  return {{"m", s.field().m()}, {"modulus", rslab::hex(s.field().modulus())}, {"n", s.n()}, {"k", s.k()},
          {"d", s.d()}, {"t", s.t()}, {"l", s.l()}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

bool parse_on_off(const std::string& s) {
  if (s == "on") return true;
  if (s == "off") return false;
  throw CLI::ValidationError("--gates", "expected on or off");
}

std::vector<rslab::DecoderConfig> parse_decoder_list(const std::string& text) {
  if (text.empty() || text == "all") return rslab::all_decoder_configs();
  std::vector<rslab::DecoderConfig> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto cfg = rslab::parse_decoder(tok);
    if (!cfg) throw rslab::InvalidParameters("unknown decoder: " + tok);
    out.push_back(*cfg);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reed-Solomon decoding laboratory"};
  app.require_subcommand(1);
  int exit_code = 0;

  // gen-field
  auto* gen = app.add_subcommand("gen-field", "Print the exp/log tables of GF(2^m)");
  int gen_m = 4;
  std::uint32_t gen_mod = 0;
  gen->add_option("--m", gen_m, "Extension degree")->check(CLI::Range(2, 16));
  gen->add_option("--modulus", gen_mod, "Primitive polynomial bitmask; 0 selects the default");
  gen->callback([&] {
    const rslab::Field f(gen_m, gen_mod);
    json logs = json::array();
    logs.push_back(nullptr);
    for (Elem a = 1; a < f.q(); ++a) logs.push_back(f.log(a));
    emit({{"m", f.m()}, {"modulus", rslab::hex(f.modulus())}, {"q", f.q()}, {"n", f.order()},
          {"exp_table", word_json(f.exp_table())}, {"log_table", logs}});
  });

  // encode
  auto* enc = app.add_subcommand("encode", "Systematically encode a message");
  CodeArgs enc_code;
  enc_code.add_to(enc);
  std::string enc_msg;
  std::uint64_t enc_seed = 1;
  enc->add_option("--message", enc_msg, "Comma-separated k symbols; random when omitted");
  enc->add_option("--seed", enc_seed, "Seed for a random message");
  enc->callback([&] {
    const auto spec = enc_code.spec();
    std::vector<Elem> msg;
    if (enc_msg.empty()) {
      std::mt19937_64 rng(enc_seed);
      msg = rslab::random_message(spec, rng);
    } else {
      msg = parse_list(spec.field(), enc_msg);
    }
    const auto cw = rslab::encode(spec, msg);
    emit({{"code", code_json(spec)}, {"generator", rslab::to_json(spec.g())}, {"message", word_json(msg)},
          {"codeword", word_json(cw)}});
  });

  // corrupt
  auto* cor = app.add_subcommand("corrupt", "Add an error pattern to a word");
  CodeArgs cor_code;
  cor_code.add_to(cor);
  std::string cor_word, cor_pos, cor_vals;
  int cor_weight = -1;
  std::uint64_t cor_seed = 1;
  cor->add_option("--word", cor_word, "Comma-separated n symbols (default: the zero word)");
  cor->add_option("--positions", cor_pos, "Comma-separated error positions");
  cor->add_option("--values", cor_vals, "Comma-separated nonzero error values");
  cor->add_option("--weight", cor_weight, "Random error weight (instead of explicit positions)");
  cor->add_option("--seed", cor_seed, "Seed for random errors");
  cor->callback([&] {
    const auto spec = cor_code.spec();
    rslab::Word w = cor_word.empty() ? rslab::Word(static_cast<std::size_t>(spec.n()), 0)
                                     : parse_list(spec.field(), cor_word);
    rslab::ErrorPattern pat;
    if (cor_weight >= 0) {
      pat = rslab::random_errors(spec, cor_weight, cor_seed);
    } else {
      pat.positions = parse_ints(cor_pos);
      pat.values = parse_list(spec.field(), cor_vals);
    }
    emit({{"received", word_json(rslab::apply_errors(w, pat))}, {"pattern", rslab::to_json(pat)}});
  });

  // decode
  auto* dec = app.add_subcommand("decode", "Decode a received word");
  CodeArgs dec_code;
  dec_code.add_to(dec);
  std::string dec_word, dec_algo = "bm", dec_values = "default", dec_gates = "on";
  bool dec_verify = false, dec_trace = false, dec_inv = false;
  dec->add_option("--word", dec_word, "Comma-separated n received symbols")->required();
  dec->add_option("--algo", dec_algo, "pgz|fpgz|bm|bm-inv|ppgz|pbm");
  dec->add_option("--values", dec_values, "default|bp|horiguchi|forney|tau|minors|delta-hat");
  dec->add_option("--gates", dec_gates, "on|off");
  dec->add_flag("--verify", dec_verify, "Check BM invariants at every iteration");
  dec->add_flag("--trace", dec_trace, "Include the per-iteration trace");
  dec->add_flag("--inversionless", dec_inv, "Inversionless cell updates (pbm)");
  dec->callback([&] {
    const auto spec = dec_code.spec();
    const rslab::Word r = parse_list(spec.field(), dec_word);
    std::string name = dec_algo;
    if (dec_inv && dec_algo == "pbm") name = "pbm-inv";
    const auto cfg = rslab::parse_decoder(name + "/" + dec_values);
    if (!cfg) throw rslab::InvalidParameters("unsupported decoder/value-formula pair: " + dec_algo + "/" + dec_values);
    rslab::DecodeOptions opt;
    opt.gates = parse_on_off(dec_gates);
    opt.verify = dec_verify;
    opt.values = cfg->values;
    opt.inversionless = cfg->inversionless;

    json out = {{"code", code_json(spec)}, {"decoder", cfg->name()}};
    rslab::DecodeResult res;
    switch (cfg->algo) {
      case rslab::Algo::Fpgz: {
        rslab::FpgzTrace tr;
        res = rslab::fpgz_decode(spec, r, opt, &tr);
        if (dec_trace) out["trace"] = rslab::to_json(tr);
        break;
      }
      case rslab::Algo::Bm: {
        rslab::BmTrace tr;
        res = rslab::bm_decode(spec, r, opt, &tr);
        if (dec_trace) out["trace"] = rslab::to_json(tr);
        break;
      }
      case rslab::Algo::Ppgz:
      case rslab::Algo::Pbm: {
        rslab::CostLedger led;
        res = cfg->algo == rslab::Algo::Ppgz ? rslab::ppgz_decode(spec, r, opt, &led)
                                             : rslab::pbm_decode(spec, r, opt, &led);
        out["ledger"] = rslab::to_json(led);
        if (res.outcome.kind == rslab::OutcomeKind::Corrected) {
          const auto rep = rslab::cost_report(led, cfg->algo, spec, res.e_tilde, cfg->inversionless);
          out["cost_report"] = rslab::to_json(rep);
          if (!rep.violations.empty()) exit_code = 1;
        }
        break;
      }
      default: res = rslab::run_decoder(spec, r, *cfg, opt.gates, opt.verify).result; break;
    }
    out["result"] = rslab::to_json(res);
    if (!res.invariant_violations.empty()) exit_code = 1;
    if (res.outcome.kind == rslab::OutcomeKind::Corrected) {
      const auto bounds = rslab::check_counter_bounds(cfg->algo, res.stats.locator, spec.t(), res.e_tilde);
      out["bound_violations"] = bounds;
      if (!bounds.empty()) exit_code = 1;
    }
    emit(out);
  });

  // bench
  auto* bench = app.add_subcommand("bench", "Random trials with counter and parallel-cost bounds");
  CodeArgs bench_code;
  bench_code.add_to(bench);
  int bench_trials = 1000, bench_wmin = 0, bench_wmax = -1, bench_threads = 0;
  std::uint64_t bench_seed = 1;
  std::string bench_report;
  bench->add_option("--trials", bench_trials, "Number of trials");
  bench->add_option("--seed", bench_seed, "Master seed");
  bench->add_option("--weight-min", bench_wmin, "Smallest error weight");
  bench->add_option("--weight-max", bench_wmax, "Largest error weight (default t)");
  bench->add_option("--threads", bench_threads, "Worker threads (capped by RS_LAB_THREADS)");
  bench->add_option("--report", bench_report, "Write the parallel cost rows to this JSON file");
  bench->callback([&] {
    rslab::TrialConfig cfg;
    cfg.m = bench_code.m;
    cfg.modulus = bench_code.modulus;
    cfg.d = bench_code.d;
    cfg.l = bench_code.l;
    cfg.trials = bench_trials;
    cfg.seed = bench_seed;
    cfg.weight_min = bench_wmin;
    cfg.weight_max = bench_wmax;
    cfg.check_theorem = false;
    cfg.keep_records = false;
    const auto rep = rslab::run_trials(cfg, bench_threads);

    // Worst measured parallel cost per (decoder, e).
    const auto spec = bench_code.spec();
    std::map<std::pair<std::string, int>, rslab::CostReport> worst;
    const rslab::DecoderConfig parallel[] = {{rslab::Algo::Ppgz, rslab::ValueFormula::Minors, false},
                                             {rslab::Algo::Pbm, rslab::ValueFormula::DeltaHat, false},
                                             {rslab::Algo::Pbm, rslab::ValueFormula::DeltaHat, true}};
    std::vector<std::string> violations;
    const int wmax = bench_wmax < 0 ? spec.t() : bench_wmax;
    for (int i = 0; i < bench_trials; ++i) {
      std::mt19937_64 rng(rslab::trial_seed(bench_seed ^ 0x5bd1e995ULL, static_cast<std::uint64_t>(i)));
      std::uniform_int_distribution<int> wd(bench_wmin, std::min(wmax, spec.t()));
      const int w = wd(rng);
      const auto c = rslab::encode(spec, rslab::random_message(spec, rng));
      const auto r = rslab::apply_errors(c, rslab::random_errors(spec, w, rng));
      for (const auto& dc : parallel) {
        const auto run = rslab::run_decoder(spec, r, dc);
        if (run.result.outcome.kind != rslab::OutcomeKind::Corrected) continue;
        auto cr = rslab::cost_report(*run.ledger, dc.algo, spec, run.result.e_tilde, dc.inversionless);
        for (const auto& v : cr.violations) violations.push_back(cr.algo + " e=" + std::to_string(cr.e) + " " + v);
        auto [it, fresh] = worst.try_emplace({cr.algo, cr.e}, cr);
        if (!fresh) {
          for (std::size_t k = 0; k < cr.rows.size(); ++k) {
            auto& row = it->second.rows[k];
            row.measured = std::max(row.measured, cr.rows[k].measured);
            row.ok = row.ok && cr.rows[k].ok;
          }
        }
      }
    }
    json costs = json::array();
    for (const auto& [key, cr] : worst) {
      json steps, space, bounds;
      for (const auto& row : cr.rows) {
        const auto dot = row.name.find('.');
        const std::string field = row.name.substr(dot + 1);
        (field.find("steps") != std::string::npos ? steps : space)[row.name] = row.measured;
        bounds[row.name] = row.bound;
      }
      costs.push_back({{"algo", cr.algo}, {"t", cr.t}, {"e", cr.e}, {"steps", steps}, {"space", space},
                       {"bounds", bounds}, {"violations", cr.violations}});
    }
    if (!bench_report.empty()) {
      std::ofstream f(bench_report);
      if (!f) throw rslab::InvalidParameters("cannot write " + bench_report);
      f << costs.dump(2) << "\n";
    }
    emit({{"summary", rslab::to_json(rep)}, {"costs", costs}, {"cost_violations", violations}});
    if (!rep.ok() || !violations.empty()) exit_code = 1;
  });

  // compare
  auto* cmp = app.add_subcommand("compare", "Run every decoder on identical inputs and compare outcomes");
  CodeArgs cmp_code;
  cmp_code.add_to(cmp);
  int cmp_trials = 1000, cmp_wmin = 0, cmp_wmax = -1, cmp_threads = 0;
  std::uint64_t cmp_seed = 1;
  std::string cmp_decoders, cmp_gates = "on";
  bool cmp_records = false, cmp_verify = false;
  cmp->add_option("--trials", cmp_trials, "Number of trials");
  cmp->add_option("--seed", cmp_seed, "Master seed");
  cmp->add_option("--weight-min", cmp_wmin, "Smallest error weight");
  cmp->add_option("--weight-max", cmp_wmax, "Largest error weight (default t)");
  cmp->add_option("--decoders", cmp_decoders, "Comma-separated decoder/values list, or all");
  cmp->add_option("--gates", cmp_gates, "on|off");
  cmp->add_option("--threads", cmp_threads, "Worker threads (capped by RS_LAB_THREADS)");
  cmp->add_flag("--records", cmp_records, "Include per-trial records");
  cmp->add_flag("--verify", cmp_verify, "Verify-mode invariants; key-equation residuals on gated corrections");
  cmp->callback([&] {
    rslab::TrialConfig cfg;
    cfg.m = cmp_code.m;
    cfg.modulus = cmp_code.modulus;
    cfg.d = cmp_code.d;
    cfg.l = cmp_code.l;
    cfg.trials = cmp_trials;
    cfg.seed = cmp_seed;
    cfg.weight_min = cmp_wmin;
    cfg.weight_max = cmp_wmax;
    cfg.decoders = parse_decoder_list(cmp_decoders);
    cfg.gates = parse_on_off(cmp_gates);
    cfg.verify = cmp_verify;
    cfg.keep_records = cmp_records;
    const auto rep = rslab::run_trials(cfg, cmp_threads);
    emit(rslab::to_json(rep));
    if (!rep.ok()) exit_code = 1;
  });

  // oracle
  auto* orc = app.add_subcommand("oracle", "Check gated decoders against exhaustive nearest-codeword search");
  rslab::OracleSweepConfig orc_cfg;
  std::string orc_decoders;
  int orc_threads = 0;
  orc->add_option("--m", orc_cfg.m, "Extension degree")->check(CLI::Range(2, 16));
  orc->add_option("--modulus", orc_cfg.modulus, "Primitive polynomial bitmask");
  orc->add_option("--d", orc_cfg.d, "Designed distance");
  orc->add_option("--samples", orc_cfg.random_words, "Uniformly random received words");
  orc->add_option("--centers", orc_cfg.centers, "Codewords whose neighbourhoods are enumerated");
  orc->add_option("--radius", orc_cfg.radius, "Neighbourhood radius");
  orc->add_option("--seed", orc_cfg.seed, "Seed");
  orc->add_option("--decoders", orc_decoders, "Comma-separated decoder/values list, or all");
  orc->add_option("--threads", orc_threads, "Worker threads (capped by RS_LAB_THREADS)");
  orc->callback([&] {
    orc_cfg.decoders = parse_decoder_list(orc_decoders);
    const auto rep = rslab::oracle_sweep(orc_cfg, orc_threads);
    emit(rslab::to_json(rep));
    if (!rep.ok()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const rslab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
