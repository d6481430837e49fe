// SPDX-License-Identifier: Apache-2.0
// Arithmetic in GF(2^m) backed by discrete-log tables.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rslab/errors.hpp"

namespace rslab {

// Polynomial-basis bitmask; bit k is the coefficient of alpha^k.
using Elem = std::uint32_t;

class Field {
 public:
  static constexpr int kMinDegree = 2;
  static constexpr int kMaxDegree = 16;

  // modulus == 0 selects a built-in primitive polynomial for m.
  explicit Field(int m, std::uint32_t modulus = 0);

  static std::uint32_t default_modulus(int m);

  int m() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t q() const noexcept { return q_; }
  // Multiplicative order q - 1, which is also the RS code length n.
  std::uint32_t order() const noexcept { return q_ - 1; }

  bool contains(Elem a) const noexcept { return a < q_; }

  Elem alpha_pow(std::int64_t k) const noexcept;
  // Discrete log of a nonzero element; throws DivisionByZero for 0.
  std::uint32_t log(Elem a) const;

  Elem add(Elem a, Elem b) const noexcept { return a ^ b; }
  Elem sub(Elem a, Elem b) const noexcept { return a ^ b; }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::int64_t k) const;

  std::string hex(Elem a) const;
  // "0", "1" or "a^k".
  std::string log_notation(Elem a) const;

  const std::vector<Elem>& exp_table() const noexcept { return exp_table_; }
  const std::vector<std::uint32_t>& log_table() const noexcept { return log_; }

 private:
  int m_;
  std::uint32_t modulus_;
  std::uint32_t q_;
  std::vector<Elem> exp_table_;  // q-1 entries
  std::vector<Elem> exp_;        // doubled table, avoids a modulo in mul
  std::vector<std::uint32_t> log_;
};

struct OpCounts {
  std::uint64_t mul = 0;
  std::uint64_t add = 0;
  std::uint64_t inv = 0;
  std::uint64_t div = 0;

  OpCounts& operator+=(const OpCounts& o) noexcept {
    mul += o.mul;
    add += o.add;
    inv += o.inv;
    div += o.div;
    return *this;
  }
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

// Field operations routed through an optional counter sink. Decoders do all
// of their locator and value arithmetic through this wrapper.
class Arith {
 public:
  explicit Arith(const Field& f, OpCounts* sink = nullptr) noexcept : f_(&f), sink_(sink) {}
  Arith(Field&&, OpCounts* = nullptr) = delete;

  const Field& field() const noexcept { return *f_; }
  void attach(OpCounts* sink) noexcept { sink_ = sink; }
  OpCounts* sink() const noexcept { return sink_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (sink_) ++sink_->add;
    return a ^ b;
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, b); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (sink_) ++sink_->mul;
    return f_->mul(a, b);
  }
  Elem inv(Elem a) const {
    if (sink_) ++sink_->inv;
    return f_->inv(a);
  }
  Elem div(Elem a, Elem b) const {
    if (sink_) ++sink_->div;
    return f_->div(a, b);
  }
  // Powers are evaluated from the log tables, so they are not charged.
  Elem pow(Elem a, std::int64_t k) const { return f_->pow(a, k); }

 private:
  const Field* f_;
  OpCounts* sink_;
};

}  // namespace rslab
