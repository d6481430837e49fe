// SPDX-License-Identifier: Apache-2.0
#include "rslab/keyeq.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace rslab {

bool SyndromeSet::all_zero() const noexcept {
  return std::all_of(s_.begin(), s_.end(), [](Elem x) { return x == 0; });
}

Matrix SyndromeSet::A() const {
  const int rows = count() - t_;
  Matrix a(static_cast<std::size_t>(std::max(rows, 0)), std::vector<Elem>(static_cast<std::size_t>(t_ + 1)));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c <= t_; ++c) a[r][c] = S(r + c + 1);
  }
  return a;
}

Matrix SyndromeSet::leading(int i) const {
  Matrix a(static_cast<std::size_t>(i), std::vector<Elem>(static_cast<std::size_t>(i)));
  for (int r = 0; r < i; ++r) {
    for (int c = 0; c < i; ++c) a[r][c] = S(r + c + 1);
  }
  return a;
}

Matrix SyndromeSet::B(int i) const {
  Matrix b(static_cast<std::size_t>(i), std::vector<Elem>(static_cast<std::size_t>(i + 1)));
  for (int r = 0; r < i; ++r) {
    for (int c = 0; c <= i; ++c) b[r][c] = S(r + c + 1);
  }
  return b;
}

Matrix SyndromeSet::minor_matrix(int i, const std::vector<int>& columns) const {
  Matrix a(static_cast<std::size_t>(i), std::vector<Elem>(columns.size()));
  for (int r = 0; r < i; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) a[r][c] = S(r + columns[c]);
  }
  return a;
}

SyndromeSet compute_syndromes(const CodeSpec& spec, const Word& r) {
  if (static_cast<int>(r.size()) != spec.n()) throw InvalidParameters("received word has wrong length");
  const Field& f = spec.field();
  std::vector<Elem> s(static_cast<std::size_t>(spec.d() - 1));
  for (int i = 1; i <= spec.d() - 1; ++i) {
    const Elem x = f.alpha_pow(spec.l() + i - 1);
    Elem acc = 0;
    for (std::size_t j = r.size(); j-- > 0;) acc = f.add(f.mul(acc, x), r[j]);
    s[static_cast<std::size_t>(i - 1)] = acc;
  }
  return SyndromeSet(std::move(s), spec.t());
}

ChienResult chien_search(const Field& f, const Poly& sigma) {
  ChienResult out;
  const int e = degree(sigma);
  if (e < 1) return out;
  const int n = static_cast<int>(f.order());
  std::vector<Elem> running(sigma.begin(), sigma.begin() + e + 1);
  std::vector<Elem> step(static_cast<std::size_t>(e + 1));
  for (int l = 0; l <= e; ++l) step[static_cast<std::size_t>(l)] = f.alpha_pow(l);
  std::vector<int> pos(static_cast<std::size_t>(e), -1);
  int k = e;
  for (int i = 1; i <= n; ++i) {
    Elem sum = running[0];
    for (int l = 1; l <= e; ++l) {
      running[static_cast<std::size_t>(l)] = f.mul(running[static_cast<std::size_t>(l)], step[static_cast<std::size_t>(l)]);
      sum ^= running[static_cast<std::size_t>(l)];
    }
    if (sum == 0 && k > 0) {
      pos[static_cast<std::size_t>(k - 1)] = n - i;
      --k;
    }
  }
  out.root_deficit = (k != 0);
  for (int idx = k; idx < e; ++idx) {
    const int p = pos[static_cast<std::size_t>(idx)];
    out.positions.push_back(p);
    out.inverse_roots.push_back(f.alpha_pow(n - p));
  }
  return out;
}

std::vector<Elem> forney(const Arith& ar, const Poly& dsigma, const Poly& omega,
                         const std::vector<Elem>& inverse_roots) {
  std::vector<Elem> values;
  values.reserve(inverse_roots.size());
  for (Elem xi : inverse_roots) {
    values.push_back(ar.div(poly_eval(ar, omega, xi), poly_eval(ar, dsigma, xi)));
  }
  return values;
}

bool key_equation_residual(const Field& f, const Poly& sigma, const Poly& omega, const Poly& S, int d) {
  const Poly prod = poly_mul(f, sigma, S);
  for (int i = 0; i < d - 1; ++i) {
    if (coeff(prod, i) != coeff(omega, i)) return false;
  }
  return true;
}

Poly evaluator_from_locator(const Arith& ar, const Poly& sigma, const SyndromeSet& syn) {
  const int e = degree(sigma);
  Poly omega(static_cast<std::size_t>(std::max(e, 0)), 0);
  for (int i = 0; i < e; ++i) {
    Elem acc = ar.mul(syn.S(i + 1), sigma[0]);
    for (int j = 1; j <= i; ++j) acc = ar.add(acc, ar.mul(syn.S(i + 1 - j), coeff(sigma, j)));
    omega[static_cast<std::size_t>(i)] = acc;
  }
  return omega;
}

std::string_view to_string(FailureReason r) noexcept {
  switch (r) {
    case FailureReason::SyndromeExhausted: return "SyndromeExhausted";
    case FailureReason::TooManyErrors: return "TooManyErrors";
    case FailureReason::ChienRootDeficit: return "ChienRootDeficit";
    case FailureReason::RankMismatch: return "RankMismatch";
    case FailureReason::DegreeMismatch: return "DegreeMismatch";
    case FailureReason::ZeroErrorValue: return "ZeroErrorValue";
  }
  return "?";
}

std::string_view to_string(OutcomeKind k) noexcept {
  switch (k) {
    case OutcomeKind::NoError: return "NoError";
    case OutcomeKind::Corrected: return "Corrected";
    case OutcomeKind::Failure: return "Failure";
  }
  return "?";
}

bool DecodeOutcome::same_as(const DecodeOutcome& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case OutcomeKind::NoError: return true;
    case OutcomeKind::Corrected: return pattern == o.pattern && codeword == o.codeword;
    case OutcomeKind::Failure: return reason == o.reason;
  }
  return false;
}

namespace {

constexpr std::array<std::pair<Algo, std::string_view>, 6> kAlgoNames = {{
    {Algo::Pgz, "pgz"},
    {Algo::Fpgz, "fpgz"},
    {Algo::Bm, "bm"},
    {Algo::BmInv, "bm-inv"},
    {Algo::Ppgz, "ppgz"},
    {Algo::Pbm, "pbm"},
}};

constexpr std::array<std::pair<ValueFormula, std::string_view>, 7> kValueNames = {{
    {ValueFormula::Default, "default"},
    {ValueFormula::Bp, "bp"},
    {ValueFormula::Horiguchi, "horiguchi"},
    {ValueFormula::Forney, "forney"},
    {ValueFormula::Tau, "tau"},
    {ValueFormula::Minors, "minors"},
    {ValueFormula::DeltaHat, "delta-hat"},
}};

}  // namespace

std::string_view to_string(Algo a) noexcept {
  for (const auto& [k, name] : kAlgoNames) {
    if (k == a) return name;
  }
  return "?";
}

std::string_view to_string(ValueFormula v) noexcept {
  for (const auto& [k, name] : kValueNames) {
    if (k == v) return name;
  }
  return "?";
}

std::optional<Algo> parse_algo(std::string_view s) noexcept {
  for (const auto& [k, name] : kAlgoNames) {
    if (name == s) return k;
  }
  return std::nullopt;
}

std::optional<ValueFormula> parse_value_formula(std::string_view s) noexcept {
  for (const auto& [k, name] : kValueNames) {
    if (name == s) return k;
  }
  return std::nullopt;
}

void rescale_for_offset(const Field& f, int l, const std::vector<Elem>& inverse_roots, std::vector<Elem>& values) {
  if (l == 1) return;
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = f.mul(values[i], f.pow(inverse_roots[i], l - 1));
}

DecodeOutcome build_correction(const CodeSpec& spec, const Word& r, const ChienResult& roots,
                               const std::vector<Elem>& values, bool gates) {
  ErrorPattern pat;
  for (std::size_t i = 0; i < roots.positions.size(); ++i) {
    if (values[i] == 0) {
      if (gates) return DecodeOutcome::failure(FailureReason::ZeroErrorValue);
      continue;
    }
    pat.positions.push_back(roots.positions[i]);
    pat.values.push_back(values[i]);
  }
  Word c = r;
  for (std::size_t i = 0; i < pat.positions.size(); ++i) {
    c[static_cast<std::size_t>(pat.positions[i])] = spec.field().sub(c[static_cast<std::size_t>(pat.positions[i])], pat.values[i]);
  }
  return DecodeOutcome::corrected(std::move(pat), std::move(c));
}

}  // namespace rslab
