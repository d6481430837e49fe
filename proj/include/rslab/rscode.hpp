// SPDX-License-Identifier: Apache-2.0
// Reed-Solomon codes RS(n, d, alpha) of full length n = q - 1.
#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "rslab/gf.hpp"
#include "rslab/poly.hpp"

namespace rslab {

// Index i holds the coefficient of x^i; length is always n.
using Word = std::vector<Elem>;

struct ErrorPattern {
  std::vector<int> positions;  // strictly increasing
  std::vector<Elem> values;    // nonzero, aligned with positions

  int weight() const noexcept { return static_cast<int>(positions.size()); }
  friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;
};

Poly generator_poly(const Field& f, int d, int l = 1);

class CodeSpec {
 public:
  CodeSpec(std::shared_ptr<const Field> field, int d, int l = 1);

  const Field& field() const noexcept { return *field_; }
  std::shared_ptr<const Field> field_ptr() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  int l() const noexcept { return l_; }
  int t() const noexcept { return (d_ - 1) / 2; }
  int k() const noexcept { return n_ - d_ + 1; }
  const Poly& g() const noexcept { return g_; }

 private:
  std::shared_ptr<const Field> field_;
  int n_;
  int d_;
  int l_;
  Poly g_;
};

// Convenience: GF(2^m) with the given modulus (0 = default) and RS(q-1, d).
CodeSpec make_code(int m, std::uint32_t modulus, int d, int l = 1);

Word encode(const CodeSpec& spec, std::span<const Elem> message);
bool is_codeword(const CodeSpec& spec, const Word& w);

Word apply_errors(const Word& w, const ErrorPattern& pattern);
ErrorPattern random_errors(const CodeSpec& spec, int weight, std::uint64_t seed);
ErrorPattern random_errors(const CodeSpec& spec, int weight, std::mt19937_64& rng);
std::vector<Elem> random_message(const CodeSpec& spec, std::mt19937_64& rng);

int hamming_weight(const Word& w) noexcept;
int hamming_distance(const Word& u, const Word& v);
// The pattern e with v = u + e.
ErrorPattern difference_pattern(const Word& u, const Word& v);

}  // namespace rslab
