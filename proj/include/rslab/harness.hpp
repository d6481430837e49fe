// SPDX-License-Identifier: Apache-2.0
// Trial engine, cross-decoder checks, counter bounds, the exhaustive
// nearest-codeword oracle and JSON serialization.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rslab/bm.hpp"
#include "rslab/parallel.hpp"
#include "rslab/pgz.hpp"

namespace rslab {

struct DecoderConfig {
  Algo algo = Algo::Bm;
  ValueFormula values = ValueFormula::Default;
  bool inversionless = false;

  std::string name() const;
  friend bool operator==(const DecoderConfig&, const DecoderConfig&) = default;
};

// Parses "algo[/values]" such as "bm/tau", "pbm-inv" or "fpgz/horiguchi".
std::optional<DecoderConfig> parse_decoder(const std::string& text);

// Every decoder paired with every value formula it supports.
std::vector<DecoderConfig> all_decoder_configs();

struct DecodeRun {
  DecodeResult result;
  std::optional<CostLedger> ledger;  // parallel decoders only
};

DecodeRun run_decoder(const CodeSpec& spec, const Word& r, const DecoderConfig& cfg, bool gates = true,
                      bool verify = false);

struct TheoremCheck {
  bool ok = true;
  std::vector<std::string> diffs;
};

// Relates every committed fast-PGZ index i (gap r) to the BM sequence:
// P_{w^{(i)}} = sigma^{(2i)} = ... = sigma^{(2i+r-1)}, Delta_{2i..2i+r-2} = 0
// and Delta_{2i+r-1} = eps_r.
TheoremCheck check_comparison_theorem(const FpgzTrace& fpgz, const BmTrace& bm);

// Bound checks on locator-phase counters. Only fpgz, bm and bm-inv carry
// published bounds; other algorithms return no violations.
std::vector<std::string> check_counter_bounds(Algo algo, const OpCounts& counts, int t, int e);

class Codebook {
 public:
  explicit Codebook(const CodeSpec& spec, std::uint64_t limit = 1'000'000);
  const std::vector<Word>& words() const noexcept { return words_; }

 private:
  std::vector<Word> words_;
};

struct OracleResult {
  int distance = 0;
  std::vector<Word> nearest;
};

OracleResult brute_force_oracle_decode(const Codebook& book, const Word& r);
OracleResult brute_force_oracle_decode(const CodeSpec& spec, const Word& r);

struct OracleSweepConfig {
  int m = 3;
  std::uint32_t modulus = 0;
  int d = 5;
  int random_words = 50'000;
  int centers = 20;
  int radius = 3;  // every word within this distance of each center
  std::uint64_t seed = 1;
  std::vector<DecoderConfig> decoders;  // empty means every configuration
};

struct OracleSweepReport {
  long long words = 0;
  long long inside = 0;   // within distance t of a codeword
  long long outside = 0;
  long long mismatches = 0;
  std::vector<std::string> samples;  // first few mismatch descriptions
  bool ok() const noexcept { return mismatches == 0; }
};

// Compares gated decoders against the nearest-codeword classification.
OracleSweepReport oracle_sweep(const OracleSweepConfig& cfg, int threads = 0);

struct TrialConfig {
  int m = 4;
  std::uint32_t modulus = 0;
  int d = 9;
  int l = 1;
  int trials = 100;
  std::uint64_t seed = 1;
  int weight_min = 0;
  int weight_max = -1;  // -1 means t
  std::vector<DecoderConfig> decoders = all_decoder_configs();
  bool gates = true;
  bool verify = false;
  bool check_theorem = true;
  bool check_bounds = true;
  bool keep_records = true;
};

struct DecoderOutcome {
  std::string decoder;
  OutcomeKind kind = OutcomeKind::NoError;
  std::optional<FailureReason> reason;
  ErrorPattern pattern;
  OpCounts locator;
  std::vector<std::string> violations;
};

struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  ErrorPattern injected;
  std::vector<DecoderOutcome> outcomes;
  bool agreement = true;
  bool roundtrip = true;  // every decoder recovered the injected codeword
  bool contract = true;   // gated outputs are codewords within distance t
  std::optional<bool> theorem;
  std::vector<std::string> violations;
};

struct DecoderSummary {
  std::string decoder;
  int corrected = 0;
  int no_error = 0;
  int failures = 0;
  OpCounts max_locator;
};

struct ComparisonReport {
  TrialConfig config;
  int trials = 0;
  int disagreements = 0;
  int roundtrip_failures = 0;
  int contract_failures = 0;
  int theorem_failures = 0;
  int bound_violations = 0;
  int invariant_violations = 0;
  std::vector<DecoderSummary> decoders;
  std::vector<TrialRecord> records;  // kept only when config.keep_records
  std::vector<std::string> sample_violations;

  bool ok() const noexcept {
    return disagreements == 0 && roundtrip_failures == 0 && contract_failures == 0 && theorem_failures == 0 &&
           bound_violations == 0 && invariant_violations == 0;
  }
};

// Derived per-trial seed; trials are reproducible independently of order.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

TrialRecord run_one_trial(const CodeSpec& spec, const TrialConfig& cfg, int index);
ComparisonReport run_trials(const TrialConfig& cfg, int threads = 0);

// Worker count: hardware concurrency capped by RS_LAB_THREADS when set.
int worker_count();

// Hex rendering used throughout the reports.
std::string hex(Elem a);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const ErrorPattern& p);
nlohmann::json to_json(const OpCounts& c);
nlohmann::json to_json(const DecodeResult& r);
nlohmann::json to_json(const CostLedger& l);
nlohmann::json to_json(const CostReport& r);
nlohmann::json to_json(const FpgzTrace& t);
nlohmann::json to_json(const BmTrace& t);
nlohmann::json to_json(const TrialRecord& r);
nlohmann::json to_json(const ComparisonReport& r);
nlohmann::json to_json(const OracleSweepReport& r);

}  // namespace rslab
