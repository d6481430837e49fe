// SPDX-License-Identifier: Apache-2.0
// Functional simulations of two parallel decoders with step and circuit
// accounting: a minor-lattice PGZ and a systolic BM array.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rslab/keyeq.hpp"

namespace rslab {

struct ParallelSteps {
  std::uint64_t mul = 0;
  std::uint64_t add = 0;
  std::uint64_t inv = 0;
  std::uint64_t div = 0;
};

struct CircuitSpace {
  std::uint64_t multipliers = 0;
  std::uint64_t adders = 0;
  std::uint64_t inverters = 0;
  std::uint64_t dividers = 0;
  std::uint64_t cells = 0;
};

struct CostLedger {
  OpCounts ops;              // every field operation, sequentially counted
  ParallelSteps steps;       // locator phase
  ParallelSteps check_steps; // minor lattice: the level that proves termination
  ParallelSteps value_steps; // error-value phase
  CircuitSpace space;        // locator phase, peak
  CircuitSpace value_space;
  std::uint64_t peak_active = 0;       // minor lattice: max i * C(t, i) over built levels
  std::uint64_t peak_level_width = 0;  // minor lattice: max C(t, i) over built levels
  int levels_built = 0;
  int edge_minors = 0;  // minors with column t+1, taken as dense determinants
};

// Level i of the minor lattice over columns 1..t. Entries are indexed by
// the column bitmask (bit j-1 for column j); only masks with i bits are set.
struct MinorTable {
  int level = 0;
  int t = 0;
  std::vector<Elem> entries;

  Elem at(const std::vector<int>& columns) const;
  Elem at_mask(std::uint32_t mask) const { return entries[mask]; }
  bool all_zero() const;
  std::size_t width() const;  // C(t, level)
};

MinorTable ppgz_level_one(const SyndromeSet& syn);
MinorTable ppgz_level_step(const Arith& ar, const MinorTable& prev, const SyndromeSet& syn,
                           CostLedger* ledger = nullptr);

struct PpgzTrace {
  std::vector<MinorTable> levels;  // levels 1 .. last built
  Poly sigma_hat;
  Poly omega_hat;
  Elem leading_minor = 0;  // D^{(e)}_{(1..e)}
};

DecodeResult ppgz_decode(const CodeSpec& spec, const Word& r, const DecodeOptions& opt = {},
                         CostLedger* ledger = nullptr, PpgzTrace* trace = nullptr);

// The cell array: d-1 cells hold (Delta-hat_j, Theta-hat_j) and t+1 cells
// hold (sigma_j, tau_j).
struct SystolicArray {
  int i = 0;
  int D = 0;
  std::vector<Elem> delta_hat;
  std::vector<Elem> theta_hat;
  std::vector<Elem> sigma;
  std::vector<Elem> tau;
  Elem beta = 1;  // inversionless scale of tau and theta

  static SystolicArray load(const SyndromeSet& syn);
  std::size_t cells() const { return delta_hat.size() + sigma.size(); }
};

void pbm_step(const Arith& ar, SystolicArray& arr, bool inversionless, CostLedger* ledger = nullptr);

struct PbmTrace {
  std::vector<Elem> delta0;  // Delta-hat_0 before each step
  std::vector<int> D;        // D(i), i = 0 .. d-1
  std::vector<Poly> sigma;   // sigma^{(i)}, i = 0 .. d-1
};

DecodeResult pbm_decode(const CodeSpec& spec, const Word& r, const DecodeOptions& opt = {},
                        CostLedger* ledger = nullptr, PbmTrace* trace = nullptr);

struct CostRow {
  std::string name;
  std::uint64_t measured = 0;
  std::uint64_t bound = 0;
  bool ok = true;
};

struct CostReport {
  std::string algo;
  int t = 0;
  int e = 0;
  std::vector<CostRow> rows;
  std::vector<std::string> violations;
};

std::uint64_t binomial(int n, int k);
int ceil_log2(std::uint64_t x);
// t * C(t, floor(t/2)): processing elements for the widest minor level.
std::uint64_t ppgz_element_bound(int t);

CostReport cost_report(const CostLedger& ledger, Algo algo, const CodeSpec& spec, int e, bool inversionless = false);

}  // namespace rslab
