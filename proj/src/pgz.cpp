// SPDX-License-Identifier: Apache-2.0
#include "rslab/pgz.hpp"

namespace rslab {

PgzCount pgz_error_count(const Arith& ar, const SyndromeSet& syn) {
  if (syn.all_zero()) return {PgzCount::Status::NoError, 0};
  for (int i = syn.t(); i >= 1; --i) {
    if (determinant(ar, syn.leading(i)) != 0) return {PgzCount::Status::Count, i};
  }
  return {PgzCount::Status::TooManyErrors, 0};
}

Poly pgz_solve_sigma(const Arith& ar, const SyndromeSet& syn, int e) {
  std::vector<Elem> rhs(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) rhs[static_cast<std::size_t>(i)] = syn.S(e + 1 + i);
  const auto sol = solve_linear(ar, syn.leading(e), rhs);
  if (!sol) throw SingularMatrix();
  // sol = (sigma_e, ..., sigma_1)
  Poly sigma(static_cast<std::size_t>(e + 1), 0);
  sigma[0] = 1;
  for (int j = 1; j <= e; ++j) sigma[static_cast<std::size_t>(j)] = (*sol)[static_cast<std::size_t>(e - j)];
  return sigma;
}

std::vector<Elem> bp_solve_values(const Arith& ar, const std::vector<Elem>& X, const std::vector<Elem>& s) {
  const int e = static_cast<int>(X.size());
  std::vector<Elem> y(s.begin(), s.begin() + e);
  auto Xk = [&](int k) { return X[static_cast<std::size_t>(k - 1)]; };
  auto yi = [&](int i) -> Elem& { return y[static_cast<std::size_t>(i)]; };
  // BP.1, first sweep
  for (int k = 1; k <= e - 1; ++k) {
    for (int i = e - 1; i >= k; --i) yi(i) = ar.sub(yi(i), ar.mul(Xk(k), yi(i - 1)));
  }
  // BP.1, second sweep
  for (int k = e - 1; k >= 1; --k) {
    for (int i = k; i <= e - 1; ++i) yi(i) = ar.div(yi(i), ar.sub(Xk(i + 1), Xk(i + 1 - k)));
    for (int i = k - 1; i <= e - 2; ++i) yi(i) = ar.sub(yi(i), yi(i + 1));
  }
  // BP.2
  std::vector<Elem> E(static_cast<std::size_t>(e));
  for (int i = 1; i <= e; ++i) E[static_cast<std::size_t>(i - 1)] = ar.div(yi(i - 1), Xk(i));
  return E;
}

Poly reciprocal_locator(const std::vector<Elem>& w) {
  const std::size_t i = w.size();
  Poly p(i + 1, 0);
  p[0] = 1;
  for (std::size_t k = 0; k < i; ++k) p[i - k] = w[k];
  return p;
}

FpgzBase fpgz_base_step(const Arith& ar, const SyndromeSet& syn) {
  FpgzBase out;
  int i0 = 1;
  while (i0 <= syn.count() && syn.S(i0) == 0) ++i0;
  if (i0 > syn.count()) {
    out.status = FpgzBase::Status::NoError;
    return out;
  }
  if (i0 > syn.t()) {
    out.status = FpgzBase::Status::TooManyErrors;
    return out;
  }
  const Elem s_inv = ar.inv(syn.S(i0));
  FpgzState& st = out.state;
  st.i = i0;
  st.y.assign(static_cast<std::size_t>(i0), 0);
  st.y[0] = s_inv;
  // Row r of A_{i0} starts with S_{i0} in column i0-1-r; solve rows top-down.
  st.w.assign(static_cast<std::size_t>(i0), 0);
  for (int r = 0; r < i0; ++r) {
    Elem acc = syn.S(i0 + 1 + r);
    for (int c = i0 - r; c < i0; ++c) acc = ar.add(acc, ar.mul(syn.S(r + c + 1), st.w[static_cast<std::size_t>(c)]));
    st.w[static_cast<std::size_t>(i0 - 1 - r)] = ar.mul(acc, s_inv);
  }
  out.status = FpgzBase::Status::Ready;
  return out;
}

namespace {

// eps_j = S_{i+j} w_0 + ... + S_{2i+j-1} w_{i-1} + S_{2i+j}
Elem epsilon(const Arith& ar, const SyndromeSet& syn, const std::vector<Elem>& w, int i, int j) {
  Elem acc = syn.S(2 * i + j);
  for (int k = 0; k < i; ++k) acc = ar.add(acc, ar.mul(syn.S(i + j + k), w[static_cast<std::size_t>(k)]));
  return acc;
}

}  // namespace

bool fpgz_iterate(const Arith& ar, FpgzState& st, const SyndromeSet& syn, FpgzTrace* trace) {
  const int t = syn.t();
  const int i = st.i;
  FpgzCommit rec;
  rec.i = i;
  rec.w = st.w;
  rec.y = st.y;
  int r = 0;
  for (int j = 1; j <= t - i; ++j) {
    const Elem eps = epsilon(ar, syn, st.w, i, j);
    rec.epsilons.push_back(eps);
    if (eps != 0) {
      r = j;
      break;
    }
  }
  rec.gap = r;
  if (r == 0) {
    st.done = true;
    if (trace) trace->commits.push_back(std::move(rec));
    return false;
  }

  const auto& w = st.w;
  const auto& y = st.y;
  const Elem eps_r = rec.epsilons.back();
  const Elem eps_r_inv = ar.inv(eps_r);
  const int n_new = i + r;

  // y^{(i+r)} = (w; 1; 0^{r-1}) / eps_r
  std::vector<Elem> y_new(static_cast<std::size_t>(n_new), 0);
  for (int k = 0; k < i; ++k) y_new[static_cast<std::size_t>(k)] = ar.mul(w[static_cast<std::size_t>(k)], eps_r_inv);
  y_new[static_cast<std::size_t>(i)] = eps_r_inv;

  std::vector<Elem> w_new(static_cast<std::size_t>(n_new), 0);
  if (r == 1) {
    const Elem eps1 = eps_r;
    Elem eta = 0;
    for (int k = 0; k < i; ++k) eta = ar.add(eta, ar.mul(syn.S(i + 1 + k), y[static_cast<std::size_t>(k)]));
    const Elem eps2 = epsilon(ar, syn, w, i, 2);
    const Elem coef = ar.sub(ar.mul(eps1, eta), eps2);
    for (int k = 0; k <= i; ++k) {
      const Elem shifted_w = k >= 1 ? w[static_cast<std::size_t>(k - 1)] : 0;
      const Elem ey = k < i ? ar.mul(eps1, y[static_cast<std::size_t>(k)]) : 0;
      w_new[static_cast<std::size_t>(k)] = ar.add(ar.sub(shifted_w, ey), ar.mul(coef, y_new[static_cast<std::size_t>(k)]));
    }
    rec.eta = eta;
  } else {
    // a^{(0)} .. a^{(r-1)} in F^{i+r}
    std::vector<std::vector<Elem>> a(static_cast<std::size_t>(r));
    a[0] = y_new;
    for (int j = 1; j < r; ++j) {
      const auto& prev = a[static_cast<std::size_t>(j - 1)];
      Elem alpha_j = 0;
      for (int k = 0; k <= i + j - 1; ++k) {
        alpha_j = ar.add(alpha_j, ar.mul(syn.S(i + r + 1 + k), prev[static_cast<std::size_t>(k)]));
      }
      std::vector<Elem> cur(static_cast<std::size_t>(n_new), 0);
      for (int k = 0; k < n_new; ++k) {
        const Elem sh = k >= 1 ? prev[static_cast<std::size_t>(k - 1)] : 0;
        const Elem a0 = a[0][static_cast<std::size_t>(k)];
        cur[static_cast<std::size_t>(k)] = a0 != 0 ? ar.sub(sh, ar.mul(alpha_j, a0)) : sh;
      }
      a[static_cast<std::size_t>(j)] = std::move(cur);
    }
    // b^{(0)} .. b^{(r)} in F^i
    std::vector<Elem> b = w;
    for (int j = 1; j <= r; ++j) {
      Elem beta_j = syn.S(2 * i + j);
      for (int k = 0; k < i; ++k) beta_j = ar.add(beta_j, ar.mul(syn.S(i + 1 + k), b[static_cast<std::size_t>(k)]));
      const Elem last = b[static_cast<std::size_t>(i - 1)];
      std::vector<Elem> nb(static_cast<std::size_t>(i), 0);
      for (int k = 0; k < i; ++k) {
        const Elem sh = k >= 1 ? b[static_cast<std::size_t>(k - 1)] : 0;
        Elem v = ar.sub(sh, ar.mul(last, w[static_cast<std::size_t>(k)]));
        nb[static_cast<std::size_t>(k)] = ar.sub(v, ar.mul(beta_j, y[static_cast<std::size_t>(k)]));
      }
      b = std::move(nb);
    }
    // gamma_1 .. gamma_r
    std::vector<Elem> gamma(static_cast<std::size_t>(r + 1), 0);
    for (int l = 1; l <= r; ++l) {
      Elem g = 0;
      for (int k = 0; k < i; ++k) g = ar.add(g, ar.mul(syn.S(i + l + k), b[static_cast<std::size_t>(k)]));
      gamma[static_cast<std::size_t>(l)] = g;
    }
    for (int k = 0; k < i; ++k) w_new[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)];
    for (int l = 0; l < r; ++l) {
      const Elem c = ar.add(gamma[static_cast<std::size_t>(r - l)], syn.S(2 * i + 2 * r - l));
      const auto& al = a[static_cast<std::size_t>(l)];
      for (int k = 0; k < n_new; ++k) {
        if (al[static_cast<std::size_t>(k)] == 0) continue;
        w_new[static_cast<std::size_t>(k)] = ar.sub(w_new[static_cast<std::size_t>(k)], ar.mul(c, al[static_cast<std::size_t>(k)]));
      }
    }
  }

  st.theta = i;
  st.w_theta = st.w;
  st.eps_gap = eps_r;
  st.i = n_new;
  st.w = std::move(w_new);
  st.y = std::move(y_new);
  if (trace) trace->commits.push_back(std::move(rec));
  return true;
}

std::vector<Elem> fpgz_values_horiguchi(const Arith& ar, const FpgzState& st, const Poly& dsigma,
                                        const std::vector<Elem>& inverse_roots) {
  const int e = st.i;
  const int theta = st.theta;
  const Poly p = reciprocal_locator(st.w_theta);
  std::vector<Elem> values;
  values.reserve(inverse_roots.size());
  for (Elem xi : inverse_roots) {
    const Elem num = ar.mul(st.eps_gap, ar.pow(xi, e + theta - 1));
    const Elem den = ar.mul(poly_eval(ar, dsigma, xi), poly_eval(ar, p, xi));
    values.push_back(ar.div(num, den));
  }
  return values;
}

namespace {

std::vector<Elem> locators_of(const Field& f, const ChienResult& roots) {
  std::vector<Elem> X;
  X.reserve(roots.positions.size());
  for (int p : roots.positions) X.push_back(f.alpha_pow(p));
  return X;
}

// Syndrome equations S_k + sum_{j=1}^{e} S_{k-j} sigma_j = 0 for k in [from, to].
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

DecodeResult pgz_decode(const CodeSpec& spec, const Word& r, const DecodeOptions& opt) {
  DecodeResult res;
  const Field& f = spec.field();
  res.syndromes = compute_syndromes(spec, r);
  const SyndromeSet& syn = res.syndromes;
  Arith ar(f, &res.stats.locator);

  const PgzCount cnt = pgz_error_count(ar, syn);
  if (cnt.status == PgzCount::Status::NoError) {
    res.outcome = DecodeOutcome::no_error(r);
    return res;
  }
  if (cnt.status == PgzCount::Status::TooManyErrors) {
    res.outcome = DecodeOutcome::failure(FailureReason::TooManyErrors);
    return res;
  }
  const int e = cnt.e;
  res.e_tilde = e;
  res.sigma = pgz_solve_sigma(ar, syn, e);

  if (opt.gates) {
    ar.attach(&res.stats.gates);
    if (!residuals_vanish(ar, syn, res.sigma, 2 * e + 1, syn.count())) {
      res.outcome = DecodeOutcome::failure(FailureReason::RankMismatch);
      return res;
    }
  }

  ar.attach(&res.stats.values);
  const ValueFormula vf = opt.values == ValueFormula::Forney ? ValueFormula::Forney : ValueFormula::Bp;
  res.values_used = vf;
  res.outcome = correct_with_locator(spec, r, res.sigma, opt.gates, res, [&](const ChienResult& roots) {
    if (vf == ValueFormula::Forney) {
      res.omega = evaluator_from_locator(ar, res.sigma, syn);
      return forney(ar, formal_derivative(res.sigma), res.omega, roots.inverse_roots);
    }
    return bp_solve_values(ar, locators_of(f, roots), syn.values());
  }, e);
  return res;
}

DecodeResult fpgz_decode(const CodeSpec& spec, const Word& r, const DecodeOptions& opt, FpgzTrace* trace) {
  DecodeResult res;
  const Field& f = spec.field();
  res.syndromes = compute_syndromes(spec, r);
  const SyndromeSet& syn = res.syndromes;
  Arith ar(f, &res.stats.locator);

  FpgzBase base = fpgz_base_step(ar, syn);
  if (base.status == FpgzBase::Status::NoError) {
    res.outcome = DecodeOutcome::no_error(r);
    return res;
  }
  if (base.status == FpgzBase::Status::TooManyErrors) {
    res.outcome = DecodeOutcome::failure(FailureReason::TooManyErrors);
    return res;
  }
  FpgzState& st = base.state;
  if (trace) trace->i0 = st.i;
  while (fpgz_iterate(ar, st, syn, trace)) {
  }
  const int e = st.i;
  res.e_tilde = e;
  res.sigma = reciprocal_locator(st.w);

  if (opt.gates) {
    ar.attach(&res.stats.gates);
    if (!residuals_vanish(ar, syn, res.sigma, syn.t() + e + 1, syn.count())) {
      res.outcome = DecodeOutcome::failure(FailureReason::RankMismatch);
      return res;
    }
  }

  ar.attach(&res.stats.values);
  ValueFormula vf = opt.values == ValueFormula::Horiguchi ? ValueFormula::Horiguchi : ValueFormula::Bp;
  if (vf == ValueFormula::Horiguchi && st.theta == 0) {
    res.horiguchi_fallback = true;
    vf = ValueFormula::Bp;
  }
  res.values_used = vf;
  res.outcome = correct_with_locator(spec, r, res.sigma, opt.gates, res, [&](const ChienResult& roots) {
    if (vf == ValueFormula::Horiguchi) {
      return fpgz_values_horiguchi(ar, st, formal_derivative(res.sigma), roots.inverse_roots);
    }
    return bp_solve_values(ar, locators_of(f, roots), syn.values());
  }, e);
  return res;
}

}  // namespace rslab
