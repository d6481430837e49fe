// SPDX-License-Identifier: Apache-2.0
// Peterson-Gorenstein-Zierler decoders: the classic determinant scan and the
// fast Hankel iteration with singularity gaps.
#pragma once

#include <optional>
#include <vector>

#include "rslab/keyeq.hpp"

namespace rslab {

struct PgzCount {
  enum class Status { NoError, Count, TooManyErrors } status = Status::NoError;
  int e = 0;
};

PgzCount pgz_error_count(const Arith& ar, const SyndromeSet& syn);
// Solves A_e (sigma_e..sigma_1)^T = -(S_{e+1}..S_{2e})^T; throws SingularMatrix.
Poly pgz_solve_sigma(const Arith& ar, const SyndromeSet& syn, int e);
// Solves sum_j E_j X_j^i = s_i (i = 1..e) for E by the two sweeps of the
// Bjorck-Pereyra scheme; X are the error locators alpha^{p_j}.
std::vector<Elem> bp_solve_values(const Arith& ar, const std::vector<Elem>& X, const std::vector<Elem>& s);

// One committed nonsingular index of the fast iteration, together with the
// epsilon scan made from it and the resulting gap (0 when the scan ended).
struct FpgzCommit {
  int i = 0;
  std::vector<Elem> w;
  std::vector<Elem> y;
  std::vector<Elem> epsilons;  // eps_1 .. eps_r (or the full zero scan)
  int gap = 0;
  std::optional<Elem> eta;  // only on the r = 1 path
};

struct FpgzState {
  int i = 0;
  std::vector<Elem> w;  // A_i w = -(S_{i+1}..S_{2i})^T
  std::vector<Elem> y;  // A_i y = (0..0,1)^T
  int theta = 0;        // previous committed index, 0 when none
  std::vector<Elem> w_theta;
  Elem eps_gap = 0;  // eps_{i-theta} from the step theta -> i
  bool done = false;
};

struct FpgzTrace {
  int i0 = 0;
  std::vector<FpgzCommit> commits;
};

struct FpgzBase {
  enum class Status { NoError, TooManyErrors, Ready } status = Status::NoError;
  FpgzState state;
};

FpgzBase fpgz_base_step(const Arith& ar, const SyndromeSet& syn);
// Advances one gap. Returns false (and marks the state done) when the epsilon
// scan is exhausted, which fixes e = state.i.
bool fpgz_iterate(const Arith& ar, FpgzState& state, const SyndromeSet& syn, FpgzTrace* trace = nullptr);
std::vector<Elem> fpgz_values_horiguchi(const Arith& ar, const FpgzState& state, const Poly& dsigma,
                                        const std::vector<Elem>& inverse_roots);
// sigma(x) = w_0 x^i + ... + w_{i-1} x + 1
Poly reciprocal_locator(const std::vector<Elem>& w);

DecodeResult pgz_decode(const CodeSpec& spec, const Word& r, const DecodeOptions& opt = {});
DecodeResult fpgz_decode(const CodeSpec& spec, const Word& r, const DecodeOptions& opt = {},
                         FpgzTrace* trace = nullptr);

}  // namespace rslab
