// SPDX-License-Identifier: Apache-2.0
#include "rslab/rscode.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rslab {

Poly generator_poly(const Field& f, int d, int l) {
  const int n = static_cast<int>(f.order());
  if (d < 2 || d > n) {
    throw InvalidParameters("design distance d must satisfy 2 <= d <= n, got d=" + std::to_string(d));
  }
  Poly g{1};
  for (int i = 0; i <= d - 2; ++i) {
    g = poly_mul(f, g, Poly{f.alpha_pow(l + i), 1});
  }
  return g;
}

CodeSpec::CodeSpec(std::shared_ptr<const Field> field, int d, int l)
    : field_(std::move(field)), n_(0), d_(d), l_(l) {
  if (!field_) throw InvalidParameters("code requires a field");
  n_ = static_cast<int>(field_->order());
  g_ = generator_poly(*field_, d, l);
}

CodeSpec make_code(int m, std::uint32_t modulus, int d, int l) {
  return CodeSpec(std::make_shared<const Field>(m, modulus), d, l);
}

Word encode(const CodeSpec& spec, std::span<const Elem> message) {
  if (static_cast<int>(message.size()) != spec.k()) {
    throw InvalidParameters("message length must be k=" + std::to_string(spec.k()));
  }
  const Field& f = spec.field();
  for (Elem m : message) {
    if (!f.contains(m)) throw InvalidParameters("message symbol outside field");
  }
  const int r = spec.d() - 1;
  Poly shifted_msg(static_cast<std::size_t>(spec.n()), 0);
  std::copy(message.begin(), message.end(), shifted_msg.begin() + r);
  const Poly rem = poly_mod(f, shifted_msg, spec.g());
  Word c = shifted_msg;
  for (std::size_t i = 0; i < rem.size(); ++i) c[i] = f.sub(c[i], rem[i]);
  return c;
}

bool is_codeword(const CodeSpec& spec, const Word& w) {
  if (static_cast<int>(w.size()) != spec.n()) return false;
  const Field& f = spec.field();
  for (int i = 0; i <= spec.d() - 2; ++i) {
    if (poly_eval(f, w, f.alpha_pow(spec.l() + i)) != 0) return false;
  }
  return true;
}

Word apply_errors(const Word& w, const ErrorPattern& pattern) {
  if (pattern.positions.size() != pattern.values.size()) {
    throw InvalidParameters("error pattern positions/values length mismatch");
  }
  Word r = w;
  for (std::size_t i = 0; i < pattern.positions.size(); ++i) {
    const int p = pattern.positions[i];
    if (p < 0 || p >= static_cast<int>(w.size())) throw InvalidParameters("error position out of range");
    if (i > 0 && pattern.positions[i - 1] >= p) {
      throw InvalidParameters("error positions must be strictly increasing");
    }
    if (pattern.values[i] == 0) throw InvalidParameters("error values must be nonzero");
    r[static_cast<std::size_t>(p)] ^= pattern.values[i];
  }
  return r;
}

ErrorPattern random_errors(const CodeSpec& spec, int weight, std::mt19937_64& rng) {
  const int n = spec.n();
  if (weight < 0 || weight > n) throw InvalidParameters("error weight must be in [0, n]");
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  // Partial Fisher-Yates gives distinct uniform positions.
  for (int i = 0; i < weight; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(pick(rng))]);
  }
  ErrorPattern pat;
  pat.positions.assign(idx.begin(), idx.begin() + weight);
  std::sort(pat.positions.begin(), pat.positions.end());
  std::uniform_int_distribution<Elem> value(1, spec.field().order());
  for (int i = 0; i < weight; ++i) pat.values.push_back(value(rng));
  return pat;
}

ErrorPattern random_errors(const CodeSpec& spec, int weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_errors(spec, weight, rng);
}

std::vector<Elem> random_message(const CodeSpec& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> sym(0, spec.field().order());
  std::vector<Elem> m(static_cast<std::size_t>(spec.k()));
  for (auto& s : m) s = sym(rng);
  return m;
}

int hamming_weight(const Word& w) noexcept {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](Elem x) { return x != 0; }));
}

int hamming_distance(const Word& u, const Word& v) {
  if (u.size() != v.size()) throw InvalidParameters("hamming distance of words with different lengths");
  int dist = 0;
  for (std::size_t i = 0; i < u.size(); ++i) dist += (u[i] != v[i]) ? 1 : 0;
  return dist;
}

ErrorPattern difference_pattern(const Word& u, const Word& v) {
  if (u.size() != v.size()) throw InvalidParameters("word length mismatch");
  ErrorPattern p;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) {
      p.positions.push_back(static_cast<int>(i));
      p.values.push_back(u[i] ^ v[i]);
    }
  }
  return p;
}

}  // namespace rslab
