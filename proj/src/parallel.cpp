// SPDX-License-Identifier: Apache-2.0
#include "rslab/parallel.hpp"

#include <algorithm>
#include <bit>

namespace rslab {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

int ceil_log2(std::uint64_t x) {
  int k = 0;
  while ((std::uint64_t{1} << k) < x) ++k;
  return k;
}

std::uint64_t ppgz_element_bound(int t) { return static_cast<std::uint64_t>(t) * binomial(t, t / 2); }

namespace {

constexpr int kMaxLatticeColumns = 20;

std::uint32_t mask_of(const std::vector<int>& columns) {
  std::uint32_t m = 0;
  for (int c : columns) m |= std::uint32_t{1} << (c - 1);
  return m;
}

// Columns 1..j and j+2..k+1 as a list.
std::vector<int> skip_one(int k, int j) {
  std::vector<int> cols;
  for (int c = 1; c <= k + 1; ++c) {
    if (c != j + 1) cols.push_back(c);
  }
  return cols;
}

bool residuals_vanish(const Arith& ar, const SyndromeSet& syn, const Poly& sigma, int from, int to) {
  const int e = degree(sigma);
  for (int k = from; k <= to; ++k) {
    Elem acc = ar.mul(syn.S(k), sigma[0]);
    for (int j = 1; j <= e; ++j) acc = ar.add(acc, ar.mul(syn.S(k - j), sigma[static_cast<std::size_t>(j)]));
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

Elem MinorTable::at(const std::vector<int>& columns) const { return entries[mask_of(columns)]; }

bool MinorTable::all_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](Elem x) { return x == 0; });
}

std::size_t MinorTable::width() const { return static_cast<std::size_t>(binomial(t, level)); }

MinorTable ppgz_level_one(const SyndromeSet& syn) {
  const int t = syn.t();
  if (t > kMaxLatticeColumns) throw SizeLimit("minor lattice supports t <= 20");
  MinorTable tab{1, t, std::vector<Elem>(std::size_t{1} << t, 0)};
  for (int j = 1; j <= t; ++j) tab.entries[std::size_t{1} << (j - 1)] = syn.S(j);
  return tab;
}

MinorTable ppgz_level_step(const Arith& ar, const MinorTable& prev, const SyndromeSet& syn, CostLedger* ledger) {
  const int t = prev.t;
  const int i = prev.level + 1;
  MinorTable cur{i, t, std::vector<Elem>(prev.entries.size(), 0)};
  if (i > t) return cur;
  const std::uint32_t limit = std::uint32_t{1} << t;
  // Gosper's hack enumerates the masks with exactly i bits.
  for (std::uint32_t m = (std::uint32_t{1} << i) - 1; m < limit;) {
    Elem acc = 0;
    for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      const int column = std::countr_zero(bit) + 1;
      acc = ar.add(acc, ar.mul(syn.S(column + i - 1), prev.entries[m ^ bit]));
    }
    cur.entries[m] = acc;
    const std::uint32_t c = m & (~m + 1);
    const std::uint32_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  if (ledger) {
    const std::uint64_t width = binomial(t, i);
    ledger->peak_active = std::max(ledger->peak_active, width * static_cast<std::uint64_t>(i));
    ledger->peak_level_width = std::max(ledger->peak_level_width, width);
    ++ledger->levels_built;
  }
  return cur;
}

DecodeResult ppgz_decode(const CodeSpec& spec, const Word& r, const DecodeOptions& opt, CostLedger* ledger,
                         PpgzTrace* trace) {
  DecodeResult res;
  CostLedger local;
  CostLedger& led = ledger ? *ledger : local;
  res.syndromes = compute_syndromes(spec, r);
  const SyndromeSet& syn = res.syndromes;
  if (syn.all_zero()) {
    res.outcome = DecodeOutcome::no_error(r);
    return res;
  }
  const int t = syn.t();
  const Field& f = spec.field();
  Arith ar(f, &led.ops);

  std::vector<MinorTable> levels;
  levels.push_back(ppgz_level_one(syn));
  led.levels_built = 1;
  led.peak_active = led.peak_level_width = static_cast<std::uint64_t>(t);
  auto finish_failure = [&](FailureReason why) {
    res.stats.locator = led.ops;
    if (trace) trace->levels = levels;
    res.outcome = DecodeOutcome::failure(why);
    return res;
  };
  if (levels.back().all_zero()) return finish_failure(FailureReason::TooManyErrors);

  auto leading = [](const MinorTable& tab) { return tab.entries[(std::uint32_t{1} << tab.level) - 1]; };

  int e = t;
  for (int i = 2; i <= t; ++i) {
    MinorTable cur = ppgz_level_step(ar, levels.back(), syn, &led);
    const bool terminal = cur.all_zero();
    ParallelSteps& steps = terminal ? led.check_steps : led.steps;
    steps.mul += 1;
    steps.add += static_cast<std::uint64_t>(ceil_log2(static_cast<std::uint64_t>(i)));
    if (terminal) {
      if (leading(levels.back()) == 0) {
        levels.push_back(std::move(cur));
        return finish_failure(FailureReason::RankMismatch);
      }
      levels.push_back(std::move(cur));
      e = i - 1;
      break;
    }
    levels.push_back(std::move(cur));
  }
  const MinorTable& top = levels[static_cast<std::size_t>(e - 1)];
  if (leading(top) == 0) return finish_failure(FailureReason::RankMismatch);
  res.e_tilde = e;

  Poly sigma_hat(static_cast<std::size_t>(e + 1), 0);
  for (int j = 0; j <= e; ++j) {
    const std::vector<int> cols = skip_one(e, j);
    Elem v;
    if (cols.back() <= t) {
      v = top.at(cols);
    } else {
      v = determinant(ar, syn.minor_matrix(e, cols));
      ++led.edge_minors;
    }
    sigma_hat[static_cast<std::size_t>(e - j)] = v;
  }
  Poly omega_hat(static_cast<std::size_t>(e), 0);
  if (e == 1) {
    omega_hat[0] = 1;
  } else {
    const MinorTable& below = levels[static_cast<std::size_t>(e - 2)];
    for (int j = 0; j < e; ++j) omega_hat[static_cast<std::size_t>(e - 1 - j)] = below.at(skip_one(e - 1, j));
  }
  res.sigma = sigma_hat;
  res.omega = omega_hat;
  const Elem lead = leading(top);
  if (trace) {
    trace->levels = levels;
    trace->sigma_hat = sigma_hat;
    trace->omega_hat = omega_hat;
    trace->leading_minor = lead;
  }
  res.stats.locator = led.ops;

  if (opt.gates) {
    ar.attach(&res.stats.gates);
    if (!residuals_vanish(ar, syn, sigma_hat, 2 * e + 1, syn.count())) {
      res.outcome = DecodeOutcome::failure(FailureReason::RankMismatch);
      return res;
    }
  }

  ar.attach(&res.stats.values);
  res.values_used = ValueFormula::Minors;
  led.value_steps.div = 1;
  led.value_steps.mul = 1;
  led.value_space.dividers = static_cast<std::uint64_t>(t);
  led.value_space.multipliers = 2 * static_cast<std::uint64_t>(t);
  const Poly dsigma = formal_derivative(sigma_hat);
  res.outcome = correct_with_locator(spec, r, sigma_hat, opt.gates, res, [&](const ChienResult& roots) {
    const Elem lead_sq = ar.mul(lead, lead);
    std::vector<Elem> values;
    for (Elem xi : roots.inverse_roots) {
      const Elem num = ar.mul(lead_sq, ar.pow(xi, 2 * (e - 1)));
      const Elem den = ar.mul(poly_eval(ar, dsigma, xi), poly_eval(ar, omega_hat, xi));
      values.push_back(ar.div(num, den));
    }
    return values;
  }, e);
  return res;
}

SystolicArray SystolicArray::load(const SyndromeSet& syn) {
  SystolicArray a;
  a.delta_hat = syn.values();
  a.theta_hat = syn.values();
  a.sigma.assign(static_cast<std::size_t>(syn.t() + 1), 0);
  a.tau.assign(static_cast<std::size_t>(syn.t() + 1), 0);
  a.sigma[0] = 1;
  a.tau[0] = 1;
  return a;
}

void pbm_step(const Arith& ar, SystolicArray& arr, bool inversionless, CostLedger* ledger) {
  const Elem d0 = arr.delta_hat.empty() ? 0 : arr.delta_hat[0];
  const std::size_t n = arr.delta_hat.size();
  const std::size_t m = arr.sigma.size();
  auto next_of = [](const std::vector<Elem>& v, std::size_t j) { return j + 1 < v.size() ? v[j + 1] : Elem{0}; };

  std::vector<Elem> dh(n), sg(m);
  for (std::size_t j = 0; j < n; ++j) {
    const Elem up = inversionless ? ar.mul(arr.beta, next_of(arr.delta_hat, j)) : next_of(arr.delta_hat, j);
    dh[j] = ar.sub(up, ar.mul(d0, arr.theta_hat[j]));
  }
  for (std::size_t j = 0; j < m; ++j) {
    const Elem own = inversionless ? ar.mul(arr.beta, arr.sigma[j]) : arr.sigma[j];
    const Elem below = j >= 1 ? arr.tau[j - 1] : 0;
    sg[j] = ar.sub(own, ar.mul(d0, below));
  }

  const bool change = d0 != 0 && 2 * arr.D < arr.i + 1;
  if (change) {
    if (inversionless) {
      for (std::size_t j = 0; j < n; ++j) arr.theta_hat[j] = next_of(arr.delta_hat, j);
      arr.tau = arr.sigma;
      arr.beta = d0;
    } else {
      const Elem q = ar.inv(d0);
      for (std::size_t j = 0; j < n; ++j) arr.theta_hat[j] = ar.mul(next_of(arr.delta_hat, j), q);
      for (std::size_t j = 0; j < m; ++j) arr.tau[j] = ar.mul(arr.sigma[j], q);
    }
    arr.D = arr.i + 1 - arr.D;
  } else {
    for (std::size_t j = m; j-- > 1;) arr.tau[j] = arr.tau[j - 1];
    arr.tau[0] = 0;
  }
  arr.delta_hat = std::move(dh);
  arr.sigma = std::move(sg);
  ++arr.i;

  if (ledger) {
    ledger->steps.mul += 1;
    ledger->steps.add += 1;
    if (change && !inversionless) ledger->steps.inv += 1;
  }
}

DecodeResult pbm_decode(const CodeSpec& spec, const Word& r, const DecodeOptions& opt, CostLedger* ledger,
                        PbmTrace* trace) {
  DecodeResult res;
  CostLedger local;
  CostLedger& led = ledger ? *ledger : local;
  res.syndromes = compute_syndromes(spec, r);
  const SyndromeSet& syn = res.syndromes;
  if (syn.all_zero()) {
    res.outcome = DecodeOutcome::no_error(r);
    return res;
  }
  const bool inv = opt.inversionless;
  Arith ar(spec.field(), &led.ops);
  SystolicArray arr = SystolicArray::load(syn);
  led.space.cells = arr.cells();
  led.space.multipliers = 2 * arr.cells();
  led.space.adders = arr.cells();
  led.space.inverters = inv ? 0 : 1;

  for (int i = 0; i < syn.count(); ++i) {
    if (trace) {
      trace->delta0.push_back(arr.delta_hat[0]);
      trace->D.push_back(arr.D);
      trace->sigma.push_back(trimmed(arr.sigma));
    }
    pbm_step(ar, arr, inv, &led);
  }
  if (trace) {
    trace->D.push_back(arr.D);
    trace->sigma.push_back(trimmed(arr.sigma));
  }
  res.stats.locator = led.ops;
  res.sigma = trimmed(arr.sigma);
  res.e_tilde = degree(res.sigma);
  if (arr.D > syn.t()) {
    res.outcome = DecodeOutcome::failure(FailureReason::TooManyErrors);
    return res;
  }
  if (opt.gates && res.e_tilde != arr.D) {
    res.outcome = DecodeOutcome::failure(FailureReason::DegreeMismatch);
    return res;
  }

  ar.attach(&res.stats.values);
  res.values_used = ValueFormula::DeltaHat;
  led.value_steps.div = 1;
  led.value_space.dividers = static_cast<std::uint64_t>(syn.t());
  const Poly tail = trimmed(arr.delta_hat);
  res.omega = tail;
  const Poly dsigma = formal_derivative(res.sigma);
  const int d = spec.d();
  res.outcome = correct_with_locator(spec, r, res.sigma, opt.gates, res, [&](const ChienResult& roots) {
    std::vector<Elem> values;
    for (Elem xi : roots.inverse_roots) {
      const Elem num = ar.mul(poly_eval(ar, tail, xi), ar.pow(xi, d - 1));
      values.push_back(ar.div(num, poly_eval(ar, dsigma, xi)));
    }
    return values;
  });
  return res;
}

CostReport cost_report(const CostLedger& ledger, Algo algo, const CodeSpec& spec, int e, bool inversionless) {
  CostReport rep;
  rep.algo = std::string(to_string(algo));
  if (algo == Algo::Pbm && inversionless) rep.algo += "-inv";
  rep.t = spec.t();
  rep.e = e;
  const auto t = static_cast<std::uint64_t>(spec.t());
  auto row = [&](std::string name, std::uint64_t measured, std::uint64_t bound) {
    CostRow r{std::move(name), measured, bound, measured <= bound};
    if (!r.ok) {
      rep.violations.push_back(r.name + ": " + std::to_string(measured) + " > " + std::to_string(bound));
    }
    rep.rows.push_back(std::move(r));
  };
  if (algo == Algo::Ppgz) {
    const auto ue = static_cast<std::uint64_t>(std::max(e, 0));
    row("locator.mult_steps", ledger.steps.mul, ue);
    row("locator.add_steps", ledger.steps.add, ue * static_cast<std::uint64_t>(ceil_log2(ue)));
    row("locator.elements", t * ledger.peak_level_width, ppgz_element_bound(spec.t()));
    row("locator.active_peak", ledger.peak_active, ppgz_element_bound(spec.t()));
    row("values.div_steps", ledger.value_steps.div, 1);
    row("values.mult_steps", ledger.value_steps.mul, 1);
    row("values.dividers", ledger.value_space.dividers, t);
    row("values.multipliers", ledger.value_space.multipliers, 2 * t);
  } else if (algo == Algo::Pbm) {
    row("locator.mult_steps", ledger.steps.mul, 2 * t + 1);
    row("locator.add_steps", ledger.steps.add, 2 * t + 1);
    row("locator.inv_steps", ledger.steps.inv, inversionless ? 0 : 2 * t + 1);
    row("locator.multipliers", ledger.space.multipliers, 6 * t + 4);
    row("locator.adders", ledger.space.adders, 3 * t + 2);
    row("locator.inverters", ledger.space.inverters, inversionless ? 0 : 1);
    row("values.div_steps", ledger.value_steps.div, 1);
    row("values.dividers", ledger.value_space.dividers, t);
  } else {
    throw InvalidParameters("cost report covers the parallel decoders only");
  }
  return rep;
}

}  // namespace rslab
