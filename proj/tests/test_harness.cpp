// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "rslab/harness.hpp"

using namespace rslab;

namespace {

const oracle::Gf ref = oracle::gf16();

Elem a(int k) { return ref.alpha(k); }

Word three_errors() { return oracle::word_from_terms(ref, 15, {{2, 2}, {8, 1}, {13, 7}}); }

}  // namespace

TEST_CASE("decoder names round-trip") {
  for (const DecoderConfig& c : all_decoder_configs()) {
    const auto parsed = parse_decoder(c.name());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == c);
  }
  CHECK(parse_decoder("bm")->values == ValueFormula::Forney);
  CHECK(parse_decoder("pbm-inv")->inversionless);
  CHECK_FALSE(parse_decoder("bm/bp").has_value());
  CHECK_FALSE(parse_decoder("zz").has_value());
  CHECK(all_decoder_configs().size() == 12);
}

TEST_CASE("comparison theorem on the three-error word") {
  CodeSpec code = make_code(4, 0x13, 9);
  FpgzTrace ft;
  BmTrace bt;
  fpgz_decode(code, three_errors(), {}, &ft);
  bm_decode(code, three_errors(), {}, &bt);
  const TheoremCheck chk = check_comparison_theorem(ft, bt);
  CHECK(chk.ok);
  CHECK(chk.diffs.empty());

  const Poly p1 = reciprocal_locator(ft.commits[0].w);
  const Poly p3 = reciprocal_locator(ft.commits[1].w);
  CHECK(poly_equal(p1, Poly{1}));
  for (int i : {2, 3}) CHECK(poly_equal(bt.iterations[static_cast<std::size_t>(i)].sigma, p1));
  for (int i : {6, 7, 8}) CHECK(poly_equal(bt.iterations[static_cast<std::size_t>(i)].sigma, p3));
  for (int i : {1, 4, 5}) {
    CHECK_FALSE(poly_equal(bt.iterations[static_cast<std::size_t>(i)].sigma, p1));
    CHECK_FALSE(poly_equal(bt.iterations[static_cast<std::size_t>(i)].sigma, p3));
  }
  // the gap-2 discrepancy pattern
  CHECK(bt.iterations[2].delta == 0);
  CHECK(bt.iterations[3].delta == ft.commits[0].epsilons.back());
}

TEST_CASE("comparison theorem flags a tampered trace") {
  CodeSpec code = make_code(4, 0x13, 9);
  FpgzTrace ft;
  BmTrace bt;
  fpgz_decode(code, three_errors(), {}, &ft);
  bm_decode(code, three_errors(), {}, &bt);
  bt.iterations[7].sigma[1] ^= 1;
  CHECK_FALSE(check_comparison_theorem(ft, bt).ok);
}

TEST_CASE("comparison theorem is vacuous without errors") {
  CodeSpec code = make_code(4, 0x13, 9);
  FpgzTrace ft;
  BmTrace bt;
  fpgz_decode(code, Word(15, 0), {}, &ft);
  bm_decode(code, Word(15, 0), {}, &bt);
  CHECK(check_comparison_theorem(ft, bt).ok);
}

TEST_CASE("counter bound checks") {
  OpCounts c{128, 81, 9, 0};
  CHECK(check_counter_bounds(Algo::Bm, c, 4, 3).empty());
  c.mul = 129;
  CHECK(check_counter_bounds(Algo::Bm, c, 4, 3).size() == 1);
  OpCounts f{123, 135, 3, 0};
  CHECK(check_counter_bounds(Algo::Fpgz, f, 4, 3).empty());
  f.inv = 4;
  CHECK_FALSE(check_counter_bounds(Algo::Fpgz, f, 4, 3).empty());
  CHECK(check_counter_bounds(Algo::BmInv, OpCounts{500, 500, 0, 0}, 4, 3).empty());
  CHECK_FALSE(check_counter_bounds(Algo::BmInv, OpCounts{1, 1, 1, 0}, 4, 3).empty());
}

TEST_CASE("brute-force oracle") {
  CodeSpec code = make_code(3, 0xB, 5);
  const Codebook book(code);
  CHECK(book.words().size() == 512);
  std::mt19937_64 rng(1);
  const Word c = encode(code, random_message(code, rng));
  const OracleResult self = brute_force_oracle_decode(book, c);
  CHECK(self.distance == 0);
  REQUIRE(self.nearest.size() == 1);
  CHECK(self.nearest[0] == c);
  for (int trial = 0; trial < 50; ++trial) {
    const Word r = apply_errors(c, random_errors(code, 1 + trial % 2, rng));
    const OracleResult res = brute_force_oracle_decode(code, r);
    REQUIRE(res.nearest.size() == 1);
    REQUIRE(res.nearest[0] == c);
  }
  CHECK_THROWS_AS(Codebook(make_code(4, 0, 9)), SizeLimit);
}

TEST_CASE("oracle sweep on a reduced sample") {
  OracleSweepConfig cfg;
  cfg.random_words = 3000;
  cfg.centers = 3;
  cfg.radius = 2;
  const OracleSweepReport rep = oracle_sweep(cfg, 2);
  CHECK(rep.words == 3000 + 3 * (1 + 7 * 7 + 21 * 49));
  CHECK(rep.inside + rep.outside == rep.words);
  CHECK(rep.inside > 0);
  CHECK(rep.outside > 0);
  CHECK(rep.ok());
}

TEST_CASE("trials within the correction radius") {
  TrialConfig cfg;
  cfg.d = 7;
  cfg.trials = 300;
  cfg.verify = true;
  const ComparisonReport rep = run_trials(cfg, 2);
  CHECK(rep.ok());
  CHECK(rep.disagreements == 0);
  CHECK(rep.roundtrip_failures == 0);
  for (const auto& rec : rep.records) {
    CHECK(rec.agreement);
    if (rec.injected.weight() > 0) {
      REQUIRE(rec.theorem.has_value());
      CHECK(*rec.theorem);
    }
  }
}

TEST_CASE("zero-weight trials report no error everywhere") {
  TrialConfig cfg;
  cfg.trials = 20;
  cfg.weight_max = 0;
  const ComparisonReport rep = run_trials(cfg, 1);
  CHECK(rep.ok());
  for (const auto& s : rep.decoders) CHECK(s.no_error == 20);
}

TEST_CASE("one error beyond the radius keeps the contract") {
  TrialConfig cfg;
  cfg.d = 5;
  cfg.trials = 1000;
  cfg.weight_min = 3;
  cfg.weight_max = 3;
  const ComparisonReport rep = run_trials(cfg, 2);
  CHECK(rep.contract_failures == 0);
  CHECK(rep.disagreements == 0);
  CHECK(rep.ok());
}

TEST_CASE("reports are deterministic and independent of worker count") {
  TrialConfig cfg;
  cfg.d = 9;
  cfg.trials = 120;
  cfg.weight_max = 8;
  cfg.seed = 77;
  const auto one = to_json(run_trials(cfg, 1)).dump();
  const auto four = to_json(run_trials(cfg, 4)).dump();
  CHECK(one == four);
  CHECK(one == to_json(run_trials(cfg, 1)).dump());
  CHECK(trial_seed(1, 2) == trial_seed(1, 2));
  CHECK(trial_seed(1, 2) != trial_seed(1, 3));
}

TEST_CASE("worker cap from the environment") {
  setenv("RS_LAB_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  setenv("RS_LAB_THREADS", "junk", 1);
  CHECK(worker_count() >= 1);
  unsetenv("RS_LAB_THREADS");
}

TEST_CASE("run_decoder attaches ledgers to the parallel decoders only") {
  CodeSpec code = make_code(4, 0x13, 9);
  for (const DecoderConfig& c : all_decoder_configs()) {
    const DecodeRun run = run_decoder(code, three_errors(), c);
    REQUIRE(run.result.outcome.kind == OutcomeKind::Corrected);
    CHECK(run.result.outcome.pattern.values == std::vector<Elem>{a(2), a(1), a(7)});
    CHECK(run.ledger.has_value() == (c.algo == Algo::Ppgz || c.algo == Algo::Pbm));
  }
}

TEST_CASE("serialization") {
  CodeSpec code = make_code(4, 0x13, 9);
  const DecodeResult res = bm_decode(code, three_errors());
  const nlohmann::json j = to_json(res);
  CHECK(j.at("outcome") == "Corrected");
  CHECK(j.at("syndromes").size() == 8);
  CHECK(j.at("sigma").size() == 4);
  CHECK(hex(0xb) == "0xb");
  const nlohmann::json f = to_json(bm_decode(code, oracle::word_from_terms(ref, 15, {{0, 1}, {3, 2}, {5, 3}, {7, 4}, {9, 5}})));
  if (f.at("outcome") == "Failure") CHECK(f.contains("failure_reason"));
}
