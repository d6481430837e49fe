// SPDX-License-Identifier: Apache-2.0
// Berlekamp-Massey decoding with three value formulas and an inversionless
// variant.
#pragma once

#include <string>
#include <vector>

#include "rslab/keyeq.hpp"

namespace rslab {

// sum_k coeffs[k] x^{low + k}
struct Laurent {
  int low = 0;
  Poly coeffs;

  int degree() const;  // -1 for the zero series
  Elem at(int exponent) const;
};

struct BmState {
  int i = 0;
  Poly sigma{1};
  Poly tau{1};
  int D = 0;
  int C = -1;
  std::vector<Elem> delta_history;
  Poly c_sigma{1};
  Elem c_delta = 0;

  bool verify = false;
  Poly omega;  // omega^{(i)}, tracked in verify mode
  Laurent gamma{-1, {1}};
};

struct InversionlessBmState {
  int i = 0;
  Poly sigma_hat{1};
  Poly tau_hat{1};
  Elem beta = 1;
  Elem b_product = 1;  // beta(0) * ... * beta(i-1)
  int D = 0;
  int C = -1;
  std::vector<Elem> delta_history;
};

struct BmIteration {
  int i = 0;
  Elem delta = 0;  // Delta_i; unset for i = d-1
  int D = 0;
  int C = -1;
  Poly sigma;
  Poly tau;
};

struct BmTrace {
  std::vector<BmIteration> iterations;  // i = 0 .. d-1
};

// Performs iteration i -> i+1. In verify mode, invariant failures are
// appended to violations.
void bm_step(const Arith& ar, BmState& st, const SyndromeSet& syn, std::vector<std::string>* violations = nullptr);
BmState bm_run(const Arith& ar, const SyndromeSet& syn, bool verify = false, BmTrace* trace = nullptr,
               std::vector<std::string>* violations = nullptr);
void bm_step_inversionless(const Arith& ar, InversionlessBmState& st, const SyndromeSet& syn);
InversionlessBmState bm_run_inversionless(const Arith& ar, const SyndromeSet& syn);

Poly bm_omega(const Arith& ar, const Poly& sigma, const SyndromeSet& syn);
std::vector<Elem> bm_values_tau(const Arith& ar, const BmState& st, int d, const Poly& dsigma,
                                const std::vector<Elem>& inverse_roots);
std::vector<Elem> bm_values_horiguchi(const Arith& ar, const BmState& st, const Poly& dsigma,
                                      const std::vector<Elem>& inverse_roots);
std::vector<Elem> bm_values_tau_scaled(const Arith& ar, const InversionlessBmState& st, int d,
                                       const Poly& dsigma_hat, const std::vector<Elem>& inverse_roots);

// Checks the verify-mode invariants of a state; returns the failed ones.
std::vector<std::string> bm_check_invariants(const Field& f, const BmState& st, const SyndromeSet& syn);

DecodeResult bm_decode(const CodeSpec& spec, const Word& r, const DecodeOptions& opt = {}, BmTrace* trace = nullptr);
DecodeResult bm_inv_decode(const CodeSpec& spec, const Word& r, const DecodeOptions& opt = {});

}  // namespace rslab
