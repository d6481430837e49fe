// SPDX-License-Identifier: Apache-2.0
#include "rslab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <thread>

namespace rslab {

namespace {

ValueFormula resolved_values(Algo algo, ValueFormula v) {
  if (v != ValueFormula::Default) return v;
  switch (algo) {
    case Algo::Pgz:
    case Algo::Fpgz: return ValueFormula::Bp;
    case Algo::Bm: return ValueFormula::Forney;
    case Algo::BmInv: return ValueFormula::Tau;
    case Algo::Ppgz: return ValueFormula::Minors;
    case Algo::Pbm: return ValueFormula::DeltaHat;
  }
  return v;
}

bool supports(Algo algo, ValueFormula v) {
  switch (algo) {
    case Algo::Pgz: return v == ValueFormula::Bp || v == ValueFormula::Forney;
    case Algo::Fpgz: return v == ValueFormula::Bp || v == ValueFormula::Horiguchi;
    case Algo::Bm: return v == ValueFormula::Forney || v == ValueFormula::Tau || v == ValueFormula::Horiguchi;
    case Algo::BmInv: return v == ValueFormula::Tau || v == ValueFormula::Forney;
    case Algo::Ppgz: return v == ValueFormula::Minors;
    case Algo::Pbm: return v == ValueFormula::DeltaHat;
  }
  return false;
}

}  // namespace

std::string DecoderConfig::name() const {
  std::string s(to_string(algo));
  if (algo == Algo::Pbm && inversionless) s += "-inv";
  s += "/";
  s += to_string(resolved_values(algo, values));
  return s;
}

std::optional<DecoderConfig> parse_decoder(const std::string& text) {
  const auto slash = text.find('/');
  std::string algo_part = text.substr(0, slash);
  const std::string value_part = slash == std::string::npos ? "default" : text.substr(slash + 1);
  DecoderConfig cfg;
  if (algo_part == "pbm-inv") {
    cfg.inversionless = true;
    algo_part = "pbm";
  }
  const auto algo = parse_algo(algo_part);
  const auto values = parse_value_formula(value_part);
  if (!algo || !values) return std::nullopt;
  cfg.algo = *algo;
  cfg.values = resolved_values(*algo, *values);
  if (!supports(cfg.algo, cfg.values)) return std::nullopt;
  return cfg;
}

std::vector<DecoderConfig> all_decoder_configs() {
  return {
      {Algo::Pgz, ValueFormula::Bp, false},        {Algo::Pgz, ValueFormula::Forney, false},
      {Algo::Fpgz, ValueFormula::Bp, false},
      {Algo::Fpgz, ValueFormula::Horiguchi, false}, {Algo::Bm, ValueFormula::Forney, false},
      {Algo::Bm, ValueFormula::Tau, false},         {Algo::Bm, ValueFormula::Horiguchi, false},
      {Algo::BmInv, ValueFormula::Tau, false},      {Algo::BmInv, ValueFormula::Forney, false},
      {Algo::Ppgz, ValueFormula::Minors, false},    {Algo::Pbm, ValueFormula::DeltaHat, false},
      {Algo::Pbm, ValueFormula::DeltaHat, true},
  };
}

DecodeRun run_decoder(const CodeSpec& spec, const Word& r, const DecoderConfig& cfg, bool gates, bool verify) {
  DecodeOptions opt;
  opt.gates = gates;
  opt.verify = verify;
  opt.values = resolved_values(cfg.algo, cfg.values);
  opt.inversionless = cfg.inversionless;
  DecodeRun run;
  switch (cfg.algo) {
    case Algo::Pgz: run.result = pgz_decode(spec, r, opt); break;
    case Algo::Fpgz: run.result = fpgz_decode(spec, r, opt); break;
    case Algo::Bm: run.result = bm_decode(spec, r, opt); break;
    case Algo::BmInv: run.result = bm_inv_decode(spec, r, opt); break;
    case Algo::Ppgz: {
      CostLedger led;
      run.result = ppgz_decode(spec, r, opt, &led);
      run.ledger = led;
      break;
    }
    case Algo::Pbm: {
      CostLedger led;
      run.result = pbm_decode(spec, r, opt, &led);
      run.ledger = led;
      break;
    }
  }
  return run;
}

TheoremCheck check_comparison_theorem(const FpgzTrace& fpgz, const BmTrace& bm) {
  TheoremCheck out;
  const auto& its = bm.iterations;
  if (its.empty() || fpgz.commits.empty()) return out;
  const int last = static_cast<int>(its.size()) - 1;  // d - 1
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.diffs.push_back(std::move(msg));
  };
  auto sigma_run = [&](const Poly& p, int from, int to, const std::string& label) {
    for (int k = from; k <= std::min(to, last); ++k) {
      if (!poly_equal(p, its[static_cast<std::size_t>(k)].sigma)) {
        fail(label + " differs from sigma^(" + std::to_string(k) + ")");
      }
    }
  };
  auto zero_run = [&](int from, int to) {
    for (int k = from; k <= std::min(to, last - 1); ++k) {
      if (its[static_cast<std::size_t>(k)].delta != 0) fail("Delta_" + std::to_string(k) + " != 0");
    }
  };

  // Before the first nonzero syndrome the locator is 1 and S_{i0} is the first discrepancy.
  const int i0 = fpgz.i0;
  sigma_run(Poly{1}, 0, i0 - 1, "P_w(0)");
  zero_run(0, i0 - 2);
  if (i0 >= 1 && i0 - 1 <= last - 1 && its[static_cast<std::size_t>(i0 - 1)].delta == 0) {
    fail("Delta_" + std::to_string(i0 - 1) + " == 0 at the first nonzero syndrome");
  }

  for (const FpgzCommit& c : fpgz.commits) {
    const Poly p = reciprocal_locator(c.w);
    const std::string label = "P_w(" + std::to_string(c.i) + ")";
    if (c.gap == 0) {
      sigma_run(p, 2 * c.i, last, label);
      zero_run(2 * c.i, last - 1);
      continue;
    }
    const int r = c.gap;
    sigma_run(p, 2 * c.i, 2 * c.i + r - 1, label);
    zero_run(2 * c.i, 2 * c.i + r - 2);
    const int k = 2 * c.i + r - 1;
    if (k <= last - 1 && its[static_cast<std::size_t>(k)].delta != c.epsilons.back()) {
      fail("Delta_" + std::to_string(k) + " != eps_" + std::to_string(r) + " at i=" + std::to_string(c.i));
    }
  }
  return out;
}

std::vector<std::string> check_counter_bounds(Algo algo, const OpCounts& c, int t, int e) {
  std::vector<std::string> v;
  const auto T = static_cast<std::uint64_t>(t);
  const auto E = static_cast<std::uint64_t>(std::max(e, 0));
  auto check = [&](const char* what, std::uint64_t measured, std::uint64_t bound) {
    if (measured > bound) {
      v.push_back(std::string(to_string(algo)) + " " + what + " " + std::to_string(measured) + " > " +
                  std::to_string(bound));
    }
  };
  switch (algo) {
    case Algo::Fpgz:
      check("inv", c.inv, E);
      check("mul", c.mul, 10 * E * T + E);
      check("add", c.add, 11 * E * T + E);
      break;
    case Algo::Bm:
      check("inv", c.inv, 2 * T + 1);
      check("mul", c.mul, 6 * T * T + 7 * T + 4);
      check("add", c.add, 4 * T * T + 4 * T + 1);
      break;
    case Algo::BmInv: check("inv", c.inv, 0); break;
    default: break;
  }
  return v;
}

Codebook::Codebook(const CodeSpec& spec, std::uint64_t limit) {
  const auto q = static_cast<std::uint64_t>(spec.field().q());
  std::uint64_t total = 1;
  for (int i = 0; i < spec.k(); ++i) {
    if (total > limit / q) throw SizeLimit("codebook exceeds the enumeration limit");
    total *= q;
  }
  words_.reserve(total);
  std::vector<Elem> msg(static_cast<std::size_t>(spec.k()), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (auto& m : msg) {
      m = static_cast<Elem>(rest % q);
      rest /= q;
    }
    words_.push_back(encode(spec, msg));
  }
}

OracleResult brute_force_oracle_decode(const Codebook& book, const Word& r) {
  OracleResult out;
  out.distance = static_cast<int>(r.size()) + 1;
  for (const Word& c : book.words()) {
    const int dist = hamming_distance(c, r);
    if (dist < out.distance) {
      out.distance = dist;
      out.nearest.clear();
    }
    if (dist == out.distance) out.nearest.push_back(c);
  }
  return out;
}

OracleResult brute_force_oracle_decode(const CodeSpec& spec, const Word& r) {
  return brute_force_oracle_decode(Codebook(spec), r);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

bool bm_family(Algo a) { return a == Algo::Bm || a == Algo::BmInv || a == Algo::Pbm; }

bool same_family(Algo a, Algo b) { return bm_family(a) == bm_family(b); }

}  // namespace

TrialRecord run_one_trial(const CodeSpec& spec, const TrialConfig& cfg, int index) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = trial_seed(cfg.seed, static_cast<std::uint64_t>(index));
  std::mt19937_64 rng(rec.seed);
  const int t = spec.t();
  const int wmax = cfg.weight_max < 0 ? t : cfg.weight_max;
  std::uniform_int_distribution<int> wdist(cfg.weight_min, wmax);
  const int weight = wdist(rng);
  const Word c = encode(spec, random_message(spec, rng));
  rec.injected = random_errors(spec, weight, rng);
  const Word r = apply_errors(c, rec.injected);
  const Field& f = spec.field();

  std::vector<DecodeOutcome> raw;
  raw.reserve(cfg.decoders.size());
  for (const DecoderConfig& dc : cfg.decoders) {
    DecodeRun run = run_decoder(spec, r, dc, cfg.gates, cfg.verify);
    const DecodeResult& res = run.result;
    DecoderOutcome o;
    o.decoder = dc.name();
    o.kind = res.outcome.kind;
    if (o.kind == OutcomeKind::Failure) o.reason = res.outcome.reason;
    o.pattern = res.outcome.pattern;
    o.locator = res.stats.locator;
    for (const auto& v : res.invariant_violations) o.violations.push_back("invariant: " + v);

    if (weight <= t) {
      const bool ok = weight == 0 ? o.kind == OutcomeKind::NoError
                                  : (o.kind == OutcomeKind::Corrected && res.outcome.codeword == c &&
                                     res.outcome.pattern == rec.injected);
      if (!ok) rec.roundtrip = false;
      if (cfg.check_bounds && o.kind == OutcomeKind::Corrected) {
        for (auto& v : check_counter_bounds(dc.algo, res.stats.locator, t, res.e_tilde)) {
          o.violations.push_back("bound: " + v);
        }
        if (run.ledger) {
          const CostReport rep = cost_report(*run.ledger, dc.algo, spec, res.e_tilde, dc.inversionless);
          for (const auto& v : rep.violations) o.violations.push_back("bound: " + o.decoder + " " + v);
        }
      }
    }
    if (cfg.gates && o.kind == OutcomeKind::Corrected) {
      if (!is_codeword(spec, res.outcome.codeword) || hamming_distance(r, res.outcome.codeword) > t) {
        rec.contract = false;
      }
    }
    if (o.kind == OutcomeKind::Corrected && cfg.verify && cfg.gates) {
      const Poly omega = evaluator_from_locator(Arith(f), res.sigma, res.syndromes);
      if (!key_equation_residual(f, res.sigma, omega, res.syndromes.poly(), spec.d())) {
        o.violations.push_back("invariant: key equation residual for " + o.decoder);
      }
    }
    raw.push_back(res.outcome);
    rec.outcomes.push_back(std::move(o));
  }
  for (std::size_t a = 0; a < raw.size(); ++a) {
    for (std::size_t b = a + 1; b < raw.size(); ++b) {
      const DecodeOutcome& x = raw[a];
      const DecodeOutcome& y = raw[b];
      const bool same = x.kind == OutcomeKind::Failure && y.kind == OutcomeKind::Failure &&
                                !same_family(cfg.decoders[a].algo, cfg.decoders[b].algo)
                            ? true
                            : x.same_as(y);
      if (!same) rec.agreement = false;
    }
  }

  if (cfg.check_theorem && weight >= 1 && weight <= t) {
    FpgzTrace ft;
    BmTrace bt;
    fpgz_decode(spec, r, {}, &ft);
    bm_decode(spec, r, {}, &bt);
    const TheoremCheck chk = check_comparison_theorem(ft, bt);
    rec.theorem = chk.ok;
    for (const auto& dmsg : chk.diffs) rec.violations.push_back("theorem: " + dmsg);
  }
  for (const auto& o : rec.outcomes) rec.violations.insert(rec.violations.end(), o.violations.begin(), o.violations.end());
  return rec;
}

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("RS_LAB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) hw = std::min<long>(hw, cap);
  }
  return hw;
}

ComparisonReport run_trials(const TrialConfig& cfg, int threads) {
  if (cfg.trials < 0) throw InvalidParameters("trial count must be nonnegative");
  const CodeSpec spec = make_code(cfg.m, cfg.modulus, cfg.d, cfg.l);
  const int wmax = cfg.weight_max < 0 ? spec.t() : cfg.weight_max;
  if (cfg.weight_min < 0 || wmax < cfg.weight_min || wmax > spec.n()) {
    throw InvalidParameters("invalid error-weight range");
  }
  if (cfg.decoders.empty()) throw InvalidParameters("no decoders configured");

  std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials));
  const int workers = std::max(1, std::min(threads > 0 ? std::min(threads, worker_count()) : worker_count(),
                                           std::max(cfg.trials, 1)));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < cfg.trials; i = next++) records[static_cast<std::size_t>(i)] = run_one_trial(spec, cfg, i);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  ComparisonReport rep;
  rep.config = cfg;
  rep.trials = cfg.trials;
  for (const auto& dc : cfg.decoders) rep.decoders.push_back({dc.name(), 0, 0, 0, {}});
  for (const auto& rec : records) {
    if (!rec.agreement) ++rep.disagreements;
    if (!rec.roundtrip) ++rep.roundtrip_failures;
    if (!rec.contract) ++rep.contract_failures;
    if (rec.theorem && !*rec.theorem) ++rep.theorem_failures;
    for (const auto& v : rec.violations) {
      if (v.rfind("bound:", 0) == 0) ++rep.bound_violations;
      if (v.rfind("invariant:", 0) == 0) ++rep.invariant_violations;
      if (rep.sample_violations.size() < 20 && v.rfind("theorem:", 0) != 0) rep.sample_violations.push_back(v);
    }
    for (std::size_t k = 0; k < rec.outcomes.size(); ++k) {
      auto& s = rep.decoders[k];
      const auto& o = rec.outcomes[k];
      switch (o.kind) {
        case OutcomeKind::Corrected: ++s.corrected; break;
        case OutcomeKind::NoError: ++s.no_error; break;
        case OutcomeKind::Failure: ++s.failures; break;
      }
      s.max_locator.mul = std::max(s.max_locator.mul, o.locator.mul);
      s.max_locator.add = std::max(s.max_locator.add, o.locator.add);
      s.max_locator.inv = std::max(s.max_locator.inv, o.locator.inv);
      s.max_locator.div = std::max(s.max_locator.div, o.locator.div);
    }
  }
  if (cfg.keep_records) rep.records = std::move(records);
  return rep;
}

namespace {

void neighbours(const Word& center, int q, int radius, std::size_t from, Word& cur, std::vector<Word>& out) {
  out.push_back(cur);
  if (radius == 0) return;
  for (std::size_t p = from; p < center.size(); ++p) {
    for (int v = 1; v < q; ++v) {
      cur[p] = center[p] ^ static_cast<Elem>(v);
      neighbours(center, q, radius - 1, p + 1, cur, out);
    }
    cur[p] = center[p];
  }
}

}  // namespace

OracleSweepReport oracle_sweep(const OracleSweepConfig& cfg, int threads) {
  const CodeSpec spec = make_code(cfg.m, cfg.modulus, cfg.d);
  const Codebook book(spec);
  const auto decoders = cfg.decoders.empty() ? all_decoder_configs() : cfg.decoders;
  const int q = static_cast<int>(spec.field().q());

  std::vector<Word> words;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> sym(0, q - 1);
  for (int k = 0; k < cfg.random_words; ++k) {
    Word w(static_cast<std::size_t>(spec.n()));
    for (auto& x : w) x = static_cast<Elem>(sym(rng));
    words.push_back(std::move(w));
  }
  for (int c = 0; c < cfg.centers; ++c) {
    const Word center = encode(spec, random_message(spec, rng));
    Word cur = center;
    neighbours(center, q, cfg.radius, 0, cur, words);
  }

  struct Tally {
    long long inside = 0, outside = 0, mismatches = 0;
    std::vector<std::string> samples;
  };
  const int workers = std::max(1, threads > 0 ? std::min(threads, worker_count()) : worker_count());
  std::vector<Tally> tallies(static_cast<std::size_t>(workers));
  std::atomic<std::size_t> next{0};
  constexpr std::size_t kChunk = 256;
  auto work = [&](int id) {
    Tally& tl = tallies[static_cast<std::size_t>(id)];
    for (std::size_t base = next.fetch_add(kChunk); base < words.size(); base = next.fetch_add(kChunk)) {
      for (std::size_t k = base; k < std::min(base + kChunk, words.size()); ++k) {
        const Word& r = words[k];
        const OracleResult orc = brute_force_oracle_decode(book, r);
        const bool in_ball = orc.distance <= spec.t();
        (in_ball ? tl.inside : tl.outside) += 1;
        for (const auto& dc : decoders) {
          const DecodeOutcome out = run_decoder(spec, r, dc, true, false).result.outcome;
          bool good;
          if (!in_ball) {
            good = out.kind == OutcomeKind::Failure;
          } else if (orc.distance == 0) {
            good = out.kind == OutcomeKind::NoError;
          } else {
            good = out.kind == OutcomeKind::Corrected && orc.nearest.size() == 1 && out.codeword == orc.nearest[0];
          }
          if (!good) {
            ++tl.mismatches;
            if (tl.samples.size() < 5) {
              tl.samples.push_back(dc.name() + " word#" + std::to_string(k) + " distance " +
                                   std::to_string(orc.distance) + " -> " + std::string(to_string(out.kind)));
            }
          }
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();

  OracleSweepReport rep;
  rep.words = static_cast<long long>(words.size());
  for (const auto& tl : tallies) {
    rep.inside += tl.inside;
    rep.outside += tl.outside;
    rep.mismatches += tl.mismatches;
    for (const auto& s : tl.samples) {
      if (rep.samples.size() < 10) rep.samples.push_back(s);
    }
  }
  return rep;
}

std::string hex(Elem a) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", a);
  return buf;
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (Elem c : trimmed(p)) j.push_back(hex(c));
  return j;
}

nlohmann::json to_json(const ErrorPattern& p) {
  nlohmann::json vals = nlohmann::json::array();
  for (Elem v : p.values) vals.push_back(hex(v));
  return {{"positions", p.positions}, {"values", vals}};
}

nlohmann::json to_json(const OpCounts& c) { return {{"mul", c.mul}, {"add", c.add}, {"inv", c.inv}, {"div", c.div}}; }

nlohmann::json to_json(const DecodeResult& r) {
  nlohmann::json syn = nlohmann::json::array();
  for (Elem s : r.syndromes.values()) syn.push_back(hex(s));
  nlohmann::json j = {
      {"syndromes", syn},
      {"sigma", to_json(r.sigma)},
      {"e_tilde", r.e_tilde},
      {"outcome", std::string(to_string(r.outcome.kind))},
      {"values_formula", std::string(to_string(r.values_used))},
      {"counts", {{"locator", to_json(r.stats.locator)}, {"values", to_json(r.stats.values)}, {"gates", to_json(r.stats.gates)}}},
  };
  if (!r.omega.empty()) j["omega"] = to_json(r.omega);
  if (r.outcome.kind == OutcomeKind::Failure) j["failure_reason"] = std::string(to_string(r.outcome.reason));
  if (r.outcome.kind == OutcomeKind::Corrected) {
    j["correction"] = to_json(r.outcome.pattern);
    nlohmann::json cw = nlohmann::json::array();
    for (Elem c : r.outcome.codeword) cw.push_back(hex(c));
    j["codeword"] = cw;
  }
  if (r.root_deficit) j["root_deficit"] = true;
  if (r.horiguchi_fallback) j["horiguchi_fallback"] = true;
  if (!r.invariant_violations.empty()) j["invariant_violations"] = r.invariant_violations;
  return j;
}

nlohmann::json to_json(const CostLedger& l) {
  auto steps = [](const ParallelSteps& s) {
    return nlohmann::json{{"mul", s.mul}, {"add", s.add}, {"inv", s.inv}, {"div", s.div}};
  };
  auto space = [](const CircuitSpace& s) {
    return nlohmann::json{{"multipliers", s.multipliers}, {"adders", s.adders}, {"inverters", s.inverters},
                          {"dividers", s.dividers}, {"cells", s.cells}};
  };
  return {{"ops", to_json(l.ops)},
          {"steps", steps(l.steps)},
          {"check_steps", steps(l.check_steps)},
          {"value_steps", steps(l.value_steps)},
          {"space", space(l.space)},
          {"value_space", space(l.value_space)},
          {"peak_active", l.peak_active},
          {"peak_level_width", l.peak_level_width},
          {"levels_built", l.levels_built},
          {"edge_minors", l.edge_minors}};
}

nlohmann::json to_json(const CostReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"name", row.name}, {"measured", row.measured}, {"bound", row.bound}, {"ok", row.ok}});
  }
  return {{"algo", r.algo}, {"t", r.t}, {"e", r.e}, {"rows", rows}, {"violations", r.violations}};
}

nlohmann::json to_json(const FpgzTrace& t) {
  nlohmann::json commits = nlohmann::json::array();
  for (const auto& c : t.commits) {
    nlohmann::json eps = nlohmann::json::array();
    for (Elem e : c.epsilons) eps.push_back(hex(e));
    nlohmann::json w = nlohmann::json::array(), y = nlohmann::json::array();
    for (Elem v : c.w) w.push_back(hex(v));
    for (Elem v : c.y) y.push_back(hex(v));
    nlohmann::json jc = {{"i", c.i}, {"w", w}, {"y", y}, {"epsilons", eps}, {"gap", c.gap}};
    if (c.eta) jc["eta"] = hex(*c.eta);
    commits.push_back(std::move(jc));
  }
  return {{"i0", t.i0}, {"commits", commits}};
}

nlohmann::json to_json(const BmTrace& t) {
  nlohmann::json its = nlohmann::json::array();
  for (std::size_t k = 0; k < t.iterations.size(); ++k) {
    const auto& it = t.iterations[k];
    nlohmann::json j = {{"i", it.i}, {"D", it.D}, {"C", it.C}, {"sigma", to_json(it.sigma)}, {"tau", to_json(it.tau)}};
    if (k + 1 < t.iterations.size()) j["delta"] = hex(it.delta);
    its.push_back(std::move(j));
  }
  return {{"iterations", its}};
}

nlohmann::json to_json(const TrialRecord& r) {
  nlohmann::json outs = nlohmann::json::array();
  for (const auto& o : r.outcomes) {
    nlohmann::json j = {{"decoder", o.decoder}, {"outcome", std::string(to_string(o.kind))}, {"locator", to_json(o.locator)}};
    if (o.reason) j["failure_reason"] = std::string(to_string(*o.reason));
    if (o.kind == OutcomeKind::Corrected) j["correction"] = to_json(o.pattern);
    outs.push_back(std::move(j));
  }
  nlohmann::json j = {{"index", r.index},          {"seed", r.seed},         {"injected", to_json(r.injected)},
                      {"agreement", r.agreement}, {"roundtrip", r.roundtrip}, {"contract", r.contract},
                      {"outcomes", outs},         {"violations", r.violations}};
  if (r.theorem) j["theorem"] = *r.theorem;
  return j;
}

nlohmann::json to_json(const ComparisonReport& r) {
  nlohmann::json decs = nlohmann::json::array();
  for (const auto& d : r.decoders) {
    decs.push_back({{"decoder", d.decoder},
                    {"corrected", d.corrected},
                    {"no_error", d.no_error},
                    {"failures", d.failures},
                    {"max_locator", to_json(d.max_locator)}});
  }
  const auto& c = r.config;
  nlohmann::json j = {
      {"config",
       {{"m", c.m}, {"modulus", hex(c.modulus)}, {"d", c.d}, {"l", c.l}, {"trials", c.trials}, {"seed", c.seed},
        {"weight_min", c.weight_min}, {"weight_max", c.weight_max}, {"gates", c.gates}, {"verify", c.verify}}},
      {"trials", r.trials},
      {"disagreements", r.disagreements},
      {"roundtrip_failures", r.roundtrip_failures},
      {"contract_failures", r.contract_failures},
      {"theorem_failures", r.theorem_failures},
      {"bound_violations", r.bound_violations},
      {"invariant_violations", r.invariant_violations},
      {"ok", r.ok()},
      {"decoders", decs},
      {"sample_violations", r.sample_violations},
  };
  if (!r.records.empty()) {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& rec : r.records) recs.push_back(to_json(rec));
    j["records"] = std::move(recs);
  }
  return j;
}

nlohmann::json to_json(const OracleSweepReport& r) {
  return {{"words", r.words},           {"inside", r.inside},   {"outside", r.outside},
          {"mismatches", r.mismatches}, {"samples", r.samples}, {"ok", r.ok()}};
}

}  // namespace rslab
