// SPDX-License-Identifier: Apache-2.0
// Key-equation machinery shared by every decoder: syndromes, Hankel views,
// Chien search, Forney evaluation and the uniform decode result.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rslab/linalg.hpp"
#include "rslab/poly.hpp"
#include "rslab/rscode.hpp"

namespace rslab {

class SyndromeSet {
 public:
  SyndromeSet() = default;
  SyndromeSet(std::vector<Elem> s, int t) : s_(std::move(s)), t_(t) {}

  // 1-based accessor; S_i for i outside [1, d-1] reads as 0.
  Elem S(int i) const noexcept {
    return (i >= 1 && i <= static_cast<int>(s_.size())) ? s_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int count() const noexcept { return static_cast<int>(s_.size()); }
  int t() const noexcept { return t_; }
  const std::vector<Elem>& values() const noexcept { return s_; }
  bool all_zero() const noexcept;

  // S(x) = S_1 + S_2 x + ... + S_{d-1} x^{d-2}
  Poly poly() const { return s_; }
  // (d-1-t) x (t+1) matrix with entry (r, c) = S_{r+c+1}.
  Matrix A() const;
  // Leading i x i block of the Hankel matrix.
  Matrix leading(int i) const;
  // i x (i+1) Hankel block.
  Matrix B(int i) const;
  // Hankel submatrix with rows 1..i and the given 1-based columns.
  Matrix minor_matrix(int i, const std::vector<int>& columns) const;

 private:
  std::vector<Elem> s_;
  int t_ = 0;
};

SyndromeSet compute_syndromes(const CodeSpec& spec, const Word& r);

struct ChienResult {
  std::vector<int> positions;       // ascending
  std::vector<Elem> inverse_roots;  // X_i^{-1}, aligned with positions
  bool root_deficit = false;
};

ChienResult chien_search(const Field& f, const Poly& sigma);

std::vector<Elem> forney(const Arith& ar, const Poly& dsigma, const Poly& omega,
                         const std::vector<Elem>& inverse_roots);

bool key_equation_residual(const Field& f, const Poly& sigma, const Poly& omega, const Poly& S, int d);

// omega = sigma * S mod x^{deg sigma}; the evaluator implied by a locator.
Poly evaluator_from_locator(const Arith& ar, const Poly& sigma, const SyndromeSet& syn);

enum class FailureReason {
  SyndromeExhausted,
  TooManyErrors,
  ChienRootDeficit,
  RankMismatch,
  DegreeMismatch,
  ZeroErrorValue,
};

std::string_view to_string(FailureReason r) noexcept;

enum class OutcomeKind { NoError, Corrected, Failure };

std::string_view to_string(OutcomeKind k) noexcept;

struct DecodeOutcome {
  OutcomeKind kind = OutcomeKind::NoError;
  ErrorPattern pattern;
  Word codeword;
  FailureReason reason = FailureReason::SyndromeExhausted;

  static DecodeOutcome no_error(const Word& r) { return {OutcomeKind::NoError, {}, r, {}}; }
  static DecodeOutcome failure(FailureReason why) { return {OutcomeKind::Failure, {}, {}, why}; }
  static DecodeOutcome corrected(ErrorPattern p, Word c) {
    return {OutcomeKind::Corrected, std::move(p), std::move(c), {}};
  }

  bool same_as(const DecodeOutcome& o) const;
};

enum class Algo { Pgz, Fpgz, Bm, BmInv, Ppgz, Pbm };
enum class ValueFormula { Default, Bp, Horiguchi, Forney, Tau, Minors, DeltaHat };

std::string_view to_string(Algo a) noexcept;
std::string_view to_string(ValueFormula v) noexcept;
std::optional<Algo> parse_algo(std::string_view s) noexcept;
std::optional<ValueFormula> parse_value_formula(std::string_view s) noexcept;

struct DecodeOptions {
  bool gates = true;
  ValueFormula values = ValueFormula::Default;
  bool verify = false;         // BM: assert the per-iteration invariants
  bool inversionless = false;  // pBM: use the scaled cell updates
};

struct DecodeStats {
  OpCounts locator;  // step 2: error-locator computation
  OpCounts values;   // step 4: error-value computation
  OpCounts gates;    // residual-equation checks
};

// Fields common to all decoders' results.
struct DecodeResult {
  DecodeOutcome outcome;
  SyndromeSet syndromes;
  Poly sigma;  // locator as produced (possibly scaled by a nonzero constant)
  Poly omega;  // evaluator when the value formula uses one
  int e_tilde = 0;
  bool root_deficit = false;
  bool horiguchi_fallback = false;
  ValueFormula values_used = ValueFormula::Default;
  DecodeStats stats;
  std::vector<std::string> invariant_violations;
};

// Chien, the value formula, the offset rescale, the nonzero-value gate and
// the final subtraction. Returns the outcome and records the root search.
// A nonnegative expected_roots also fails the decode when the number of
// roots found differs from it.
template <class ValueFn>
DecodeOutcome correct_with_locator(const CodeSpec& spec, const Word& r, const Poly& sigma, bool gates,
                                   DecodeResult& res, ValueFn&& compute_values, int expected_roots = -1);

// Rescale values produced for l = 1 to an arbitrary root offset l.
void rescale_for_offset(const Field& f, int l, const std::vector<Elem>& inverse_roots, std::vector<Elem>& values);

DecodeOutcome build_correction(const CodeSpec& spec, const Word& r, const ChienResult& roots,
                               const std::vector<Elem>& values, bool gates);

template <class ValueFn>
DecodeOutcome correct_with_locator(const CodeSpec& spec, const Word& r, const Poly& sigma, bool gates,
                                   DecodeResult& res, ValueFn&& compute_values, int expected_roots) {
  const ChienResult roots = chien_search(spec.field(), sigma);
  res.root_deficit = roots.root_deficit ||
                     (expected_roots >= 0 && static_cast<int>(roots.positions.size()) != expected_roots);
  if (res.root_deficit) return DecodeOutcome::failure(FailureReason::ChienRootDeficit);
  std::vector<Elem> values;
  try {
    values = compute_values(roots);
  } catch (const DivisionByZero&) {
    return DecodeOutcome::failure(FailureReason::ZeroErrorValue);
  }
  rescale_for_offset(spec.field(), spec.l(), roots.inverse_roots, values);
  return build_correction(spec, r, roots, values, gates);
}

}  // namespace rslab
