// SPDX-License-Identifier: Apache-2.0
#include "rslab/gf.hpp"

#include <array>
#include <cstdio>

namespace rslab {

namespace {

constexpr std::array<std::uint32_t, 17> kDefaultModuli = {
    0,      0,      0x7,    0xB,    0x13,   0x25,   0x43,    0x89,   0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

}  // namespace

std::uint32_t Field::default_modulus(int m) {
  if (m < kMinDegree || m > kMaxDegree) {
    throw InvalidParameters("field degree m must be in [2, 16], got " + std::to_string(m));
  }
  return kDefaultModuli[static_cast<std::size_t>(m)];
}

Field::Field(int m, std::uint32_t modulus) : m_(m), modulus_(modulus), q_(0) {
  if (m < kMinDegree || m > kMaxDegree) {
    throw InvalidParameters("field degree m must be in [2, 16], got " + std::to_string(m));
  }
  if (modulus_ == 0) modulus_ = default_modulus(m);
  q_ = 1u << m;
  if ((modulus_ >> m) != 1u) {
    throw InvalidParameters("modulus must have degree exactly m");
  }
  const std::uint32_t n = q_ - 1;
  exp_table_.resize(n);
  log_.assign(q_, 0);
  std::vector<bool> seen(q_, false);
  Elem x = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    if (seen[x]) {
      throw InvalidParameters("modulus is not primitive: x has order " + std::to_string(k));
    }
    seen[x] = true;
    exp_table_[k] = x;
    log_[x] = k;
    x <<= 1;
    if (x & q_) x ^= modulus_;
  }
  if (x != 1) throw InvalidParameters("modulus is not primitive");
  exp_.resize(2 * static_cast<std::size_t>(n));
  for (std::uint32_t k = 0; k < 2 * n; ++k) exp_[k] = exp_table_[k % n];
}

Elem Field::alpha_pow(std::int64_t k) const noexcept {
  const auto n = static_cast<std::int64_t>(order());
  std::int64_t r = k % n;
  if (r < 0) r += n;
  return exp_table_[static_cast<std::size_t>(r)];
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw DivisionByZero();
  if (!contains(a)) throw InvalidParameters("element outside field");
  return log_[a];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DivisionByZero();
  const std::uint32_t n = order();
  return exp_table_[(n - log_[a]) % n];
}

Elem Field::div(Elem a, Elem b) const {
  if (b == 0) throw DivisionByZero();
  if (a == 0) return 0;
  return exp_[log_[a] + (order() - log_[b])];
}

Elem Field::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw DivisionByZero();
    return 0;
  }
  return alpha_pow(static_cast<std::int64_t>(log_[a]) * k);
}

std::string Field::hex(Elem a) const {
  const int digits = (m_ + 3) / 4;
  char buf[16];
  std::snprintf(buf, sizeof buf, "%0*x", digits, a);
  return buf;
}

std::string Field::log_notation(Elem a) const {
  if (a == 0) return "0";
  if (a == 1) return "1";
  return "a^" + std::to_string(log_[a]);
}

}  // namespace rslab
