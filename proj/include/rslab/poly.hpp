// SPDX-License-Identifier: Apache-2.0
// Dense polynomials over GF(2^m); index i holds the coefficient of x^i.
//
// The arithmetic helpers are templates over an "ops" type, which is either a
// Field (uncounted) or an Arith (counted).
#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "rslab/gf.hpp"

namespace rslab {

using Poly = std::vector<Elem>;

// Degree of p, or -1 for the zero polynomial.
inline int degree(const Poly& p) noexcept {
  for (std::size_t i = p.size(); i > 0; --i) {
    if (p[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

inline Poly trimmed(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline bool poly_equal(const Poly& a, const Poly& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Elem x = i < a.size() ? a[i] : 0;
    const Elem y = i < b.size() ? b[i] : 0;
    if (x != y) return false;
  }
  return true;
}

inline Elem coeff(const Poly& p, int i) noexcept {
  return (i >= 0 && static_cast<std::size_t>(i) < p.size()) ? p[static_cast<std::size_t>(i)] : 0;
}

// Multiply by x^k.
inline Poly shifted(const Poly& p, int k) {
  Poly r(static_cast<std::size_t>(k), 0);
  r.insert(r.end(), p.begin(), p.end());
  return r;
}

// Characteristic 2: only odd-degree terms survive differentiation.
inline Poly formal_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1, 0);
  for (std::size_t j = 1; j < p.size(); j += 2) r[j - 1] = p[j];
  return trimmed(std::move(r));
}

template <class Ops>
Elem poly_eval(const Ops& ops, const Poly& p, Elem x) {
  const int deg = degree(p);
  if (deg < 0) return 0;
  Elem acc = p[static_cast<std::size_t>(deg)];
  for (int i = deg - 1; i >= 0; --i) acc = ops.add(ops.mul(acc, x), p[static_cast<std::size_t>(i)]);
  return acc;
}

template <class Ops>
Poly poly_add(const Ops& ops, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Elem x = i < a.size() ? a[i] : 0;
    const Elem y = i < b.size() ? b[i] : 0;
    if (x != 0 && y != 0) {
      r[i] = ops.add(x, y);
    } else {
      r[i] = x ^ y;
    }
  }
  return r;
}

template <class Ops>
Poly poly_scale(const Ops& ops, const Poly& a, Elem c) {
  Poly r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ops.mul(a[i], c);
  return r;
}

template <class Ops>
Poly poly_mul(const Ops& ops, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
    }
  }
  return r;
}

// Remainder of a modulo a monic-or-not nonzero divisor.
template <class Ops>
Poly poly_mod(const Ops& ops, Poly a, const Poly& divisor) {
  const int dd = degree(divisor);
  if (dd < 0) throw DivisionByZero();
  const Elem lead_inv = ops.inv(divisor[static_cast<std::size_t>(dd)]);
  for (int i = degree(a); i >= dd; --i) {
    const Elem c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Elem f = ops.mul(c, lead_inv);
    for (int j = 0; j <= dd; ++j) {
      const auto idx = static_cast<std::size_t>(i - dd + j);
      a[idx] = ops.sub(a[idx], ops.mul(f, divisor[static_cast<std::size_t>(j)]));
    }
  }
  a.resize(static_cast<std::size_t>(std::max(dd, 0)));
  return a;
}

}  // namespace rslab
