// SPDX-License-Identifier: Apache-2.0
// Reference arithmetic for the test suites. Nothing here touches the log
// tables in the library: multiplication is shift-and-add with reduction,
// inversion is exhaustive search, determinants use cofactor expansion.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

using Elem = std::uint32_t;
using Poly = std::vector<Elem>;
using Matrix = std::vector<std::vector<Elem>>;

struct Gf {
  int m;
  std::uint32_t modulus;

  std::uint32_t q() const { return 1u << m; }

  Elem mul(Elem a, Elem b) const {
    Elem acc = 0;
    while (b != 0) {
      if (b & 1u) acc ^= a;
      b >>= 1;
      a <<= 1;
      if (a & q()) a ^= modulus;
    }
    return acc;
  }

  Elem pow(Elem a, long long k) const {
    const long long ord = static_cast<long long>(q()) - 1;
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    if (a != 0) k %= ord;
    Elem r = 1;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  // alpha is the residue class of x, i.e. the bitmask 0b10.
  Elem alpha(long long k) const { return pow(2, ((k % (q() - 1)) + (q() - 1)) % (q() - 1)); }

  Elem inv(Elem a) const {
    for (Elem x = 1; x < q(); ++x) {
      if (mul(a, x) == 1) return x;
    }
    throw std::domain_error("no inverse");
  }

  Elem eval(const Poly& p, Elem x) const {
    Elem acc = 0;
    Elem xp = 1;
    for (Elem c : p) {
      acc ^= mul(c, xp);
      xp = mul(xp, x);
    }
    return acc;
  }

  Poly polymul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= mul(a[i], b[j]);
    }
    return r;
  }

  // Cofactor expansion along the first row; fine for the small sizes tested.
  Elem det(const Matrix& a) const {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Elem acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (a[0][c] == 0) continue;
      Matrix sub;
      for (std::size_t r = 1; r < n; ++r) {
        std::vector<Elem> row;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != c) row.push_back(a[r][k]);
        }
        sub.push_back(row);
      }
      acc ^= mul(a[0][c], det(sub));
    }
    return acc;
  }

  int rank(Matrix a) const {
    int rk = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rk) < rows; ++c) {
      std::size_t piv = static_cast<std::size_t>(rk);
      while (piv < rows && a[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[static_cast<std::size_t>(rk)]);
      const Elem pinv = inv(a[static_cast<std::size_t>(rk)][c]);
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == static_cast<std::size_t>(rk) || a[r][c] == 0) continue;
        const Elem f = mul(a[r][c], pinv);
        for (std::size_t k = 0; k < cols; ++k) a[r][k] ^= mul(f, a[static_cast<std::size_t>(rk)][k]);
      }
      ++rk;
    }
    return rk;
  }

  // Cramer's rule on top of det().
  std::vector<Elem> solve(const Matrix& a, const std::vector<Elem>& b) const {
    const Elem d = det(a);
    if (d == 0) throw std::domain_error("singular");
    const Elem dinv = inv(d);
    std::vector<Elem> x(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) {
      Matrix m2 = a;
      for (std::size_t r = 0; r < a.size(); ++r) m2[r][c] = b[r];
      x[c] = mul(det(m2), dinv);
    }
    return x;
  }

  // Every nonzero x with p(x) = 0.
  std::vector<Elem> roots(const Poly& p) const {
    std::vector<Elem> out;
    for (Elem x = 1; x < q(); ++x) {
      if (eval(p, x) == 0) out.push_back(x);
    }
    return out;
  }

  // S_i = r(alpha^{l+i-1}), i = 1..count, by direct power sums.
  std::vector<Elem> syndromes(const std::vector<Elem>& word, int count, int l = 1) const {
    std::vector<Elem> s;
    for (int i = 1; i <= count; ++i) {
      Elem acc = 0;
      for (std::size_t j = 0; j < word.size(); ++j) {
        acc ^= mul(word[j], alpha(static_cast<long long>(l + i - 1) * static_cast<long long>(j)));
      }
      s.push_back(acc);
    }
    return s;
  }
};

inline Gf gf16() { return {4, 0x13}; }
inline Gf gf8() { return {3, 0xB}; }

// Word of length n with coefficient alpha^{exp} at each (position, exp) term.
struct Term {
  int pos;
  int exp;
};

inline std::vector<Elem> word_from_terms(const Gf& f, int n, const std::vector<Term>& terms) {
  std::vector<Elem> w(static_cast<std::size_t>(n), 0);
  for (const Term& t : terms) w[static_cast<std::size_t>(t.pos)] ^= f.alpha(t.exp);
  return w;
}

inline Matrix hankel(const std::vector<Elem>& s, int rows, const std::vector<int>& cols) {
  Matrix a;
  for (int r = 1; r <= rows; ++r) {
    std::vector<Elem> row;
    for (int c : cols) {
      const int idx = r + c - 1;
      row.push_back(idx >= 1 && idx <= static_cast<int>(s.size()) ? s[static_cast<std::size_t>(idx - 1)] : 0);
    }
    a.push_back(row);
  }
  return a;
}

inline Matrix leading(const std::vector<Elem>& s, int i) {
  std::vector<int> cols;
  for (int c = 1; c <= i; ++c) cols.push_back(c);
  return hankel(s, i, cols);
}

}  // namespace oracle
