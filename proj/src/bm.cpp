// SPDX-License-Identifier: Apache-2.0
#include "rslab/bm.hpp"

#include <algorithm>

namespace rslab {

int Laurent::degree() const {
  const int dg = rslab::degree(coeffs);
  return dg < 0 ? -1 : low + dg;
}

Elem Laurent::at(int exponent) const { return coeff(coeffs, exponent - low); }

namespace {

Laurent times_x(Laurent a) {
  ++a.low;
  return a;
}

Laurent from_poly(const Poly& p) { return {0, p}; }

Poly to_poly(const Laurent& a) {
  if (a.low >= 0) return shifted(a.coeffs, a.low);
  Poly p;
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
    const int ex = a.low + static_cast<int>(k);
    if (a.coeffs[k] == 0) continue;
    if (ex < 0) throw Error("series has negative powers");
    if (p.size() <= static_cast<std::size_t>(ex)) p.resize(static_cast<std::size_t>(ex) + 1, 0);
    p[static_cast<std::size_t>(ex)] = a.coeffs[k];
  }
  return p;
}

Laurent laurent_mul(const Field& f, const Poly& p, const Laurent& a) { return {a.low, poly_mul(f, p, a.coeffs)}; }

Laurent laurent_add(const Laurent& a, const Laurent& b) {
  const int low = std::min(a.low, b.low);
  const int high = std::max(a.low + static_cast<int>(a.coeffs.size()), b.low + static_cast<int>(b.coeffs.size()));
  Laurent r{low, Poly(static_cast<std::size_t>(std::max(high - low, 0)), 0)};
  for (int ex = low; ex < high; ++ex) r.coeffs[static_cast<std::size_t>(ex - low)] = a.at(ex) ^ b.at(ex);
  return r;
}

Laurent monomial(int ex) { return {ex, {1}}; }

// Coefficients with exponent below `bound` agree.
bool agree_below(const Laurent& a, const Laurent& b, int bound) {
  const int low = std::min(a.low, b.low);
  for (int ex = low; ex < bound; ++ex) {
    if (a.at(ex) != b.at(ex)) return false;
  }
  return true;
}

bool laurent_equal(const Laurent& a, const Laurent& b) {
  const int high = std::max(a.low + static_cast<int>(a.coeffs.size()), b.low + static_cast<int>(b.coeffs.size()));
  return agree_below(a, b, high);
}

// sigma - delta * x * tau, charging only the products that are formed.
Poly sub_scaled_shift(const Arith& ar, const Poly& sigma, Elem delta, const Poly& tau) {
  const int dt = degree(tau);
  Poly out = sigma;
  if (out.size() < static_cast<std::size_t>(dt + 2)) out.resize(static_cast<std::size_t>(dt + 2), 0);
  for (int j = 0; j <= dt; ++j) {
    const Elem tj = tau[static_cast<std::size_t>(j)];
    if (tj == 0) continue;
    const Elem prod = ar.mul(delta, tj);
    auto& slot = out[static_cast<std::size_t>(j + 1)];
    slot = slot != 0 ? ar.sub(slot, prod) : prod;
  }
  return trimmed(std::move(out));
}

Elem discrepancy(const Arith& ar, const Poly& sigma, const SyndromeSet& syn, int i, bool monic) {
  const int ds = degree(sigma);
  Elem acc = monic ? syn.S(i + 1) : ar.mul(syn.S(i + 1), sigma[0]);
  for (int j = 1; j <= ds; ++j) {
    const Elem sj = sigma[static_cast<std::size_t>(j)];
    const Elem s = syn.S(i + 1 - j);
    if (sj == 0 || s == 0) continue;
    acc = ar.add(acc, ar.mul(s, sj));
  }
  return acc;
}

}  // namespace

std::vector<std::string> bm_check_invariants(const Field& f, const BmState& st, const SyndromeSet& syn) {
  std::vector<std::string> out;
  const int i = st.i;
  const std::string at = " at i=" + std::to_string(i);
  if (coeff(st.sigma, 0) != 1) out.push_back("sigma(0) != 1" + at);
  if (degree(st.sigma) > st.D) out.push_back("deg sigma > D" + at);
  if (degree(st.tau) > i - st.D) out.push_back("deg tau > i - D" + at);
  if (degree(st.omega) > st.D - 1) out.push_back("deg omega > D - 1" + at);
  if (st.gamma.degree() > i - st.D - 1) out.push_back("deg gamma > i - D - 1" + at);
  if (st.D < 0 || st.D > i) out.push_back("D out of range" + at);

  // omega tau - sigma gamma = x^{i-1}
  const Laurent lhs = laurent_add(from_poly(poly_mul(f, st.omega, st.tau)), laurent_mul(f, st.sigma, st.gamma));
  if (!laurent_equal(lhs, monomial(i - 1))) out.push_back("omega*tau - sigma*gamma != x^(i-1)" + at);

  const Poly S = syn.poly();
  if (!agree_below(from_poly(poly_mul(f, st.sigma, S)), from_poly(st.omega), i)) {
    out.push_back("sigma*S != omega mod x^i" + at);
  }
  if (!agree_below(from_poly(poly_mul(f, st.tau, S)), laurent_add(st.gamma, monomial(i - 1)), i)) {
    out.push_back("tau*S != gamma + x^(i-1) mod x^i" + at);
  }
  return out;
}

void bm_step(const Arith& ar, BmState& st, const SyndromeSet& syn, std::vector<std::string>* violations) {
  const int i = st.i;
  const Elem delta = discrepancy(ar, st.sigma, syn, i, true);
  st.delta_history.push_back(delta);

  Poly next_sigma = delta != 0 ? sub_scaled_shift(ar, st.sigma, delta, st.tau) : st.sigma;
  Poly next_omega;
  Laurent next_gamma;
  if (st.verify) {
    const Field& f = ar.field();
    next_omega = st.omega;
    if (delta != 0) {
      next_omega = trimmed(poly_add(f, st.omega, poly_scale(f, to_poly(times_x(st.gamma)), delta)));
    }
  }

  if (delta == 0 || 2 * st.D >= i + 1) {
    st.tau = shifted(st.tau, 1);
    if (st.verify) next_gamma = times_x(st.gamma);
  } else {
    const Elem inv = ar.inv(delta);
    st.c_sigma = st.sigma;
    st.c_delta = delta;
    st.C = i;
    st.tau = trimmed(poly_scale(ar, st.sigma, inv));
    st.D = i + 1 - st.D;
    if (st.verify) next_gamma = from_poly(trimmed(poly_scale(ar.field(), st.omega, ar.field().inv(delta))));
  }
  st.sigma = std::move(next_sigma);
  st.tau = trimmed(std::move(st.tau));
  st.i = i + 1;
  if (st.verify) {
    st.omega = std::move(next_omega);
    st.gamma = std::move(next_gamma);
    if (violations) {
      auto found = bm_check_invariants(ar.field(), st, syn);
      violations->insert(violations->end(), found.begin(), found.end());
    }
  }
}

BmState bm_run(const Arith& ar, const SyndromeSet& syn, bool verify, BmTrace* trace,
               std::vector<std::string>* violations) {
  BmState st;
  st.verify = verify;
  if (verify && violations) {
    auto found = bm_check_invariants(ar.field(), st, syn);
    violations->insert(violations->end(), found.begin(), found.end());
  }
  for (int i = 0; i < syn.count(); ++i) {
    if (trace) trace->iterations.push_back({st.i, 0, st.D, st.C, st.sigma, st.tau});
    bm_step(ar, st, syn, violations);
    if (trace) trace->iterations.back().delta = st.delta_history.back();
  }
  if (trace) trace->iterations.push_back({st.i, 0, st.D, st.C, st.sigma, st.tau});
  return st;
}

void bm_step_inversionless(const Arith& ar, InversionlessBmState& st, const SyndromeSet& syn) {
  const int i = st.i;
  const Elem delta = discrepancy(ar, st.sigma_hat, syn, i, false);
  st.delta_history.push_back(delta);

  Poly next = poly_scale(ar, st.sigma_hat, st.beta);
  if (delta != 0) next = sub_scaled_shift(ar, next, delta, st.tau_hat);
  st.b_product = ar.mul(st.b_product, st.beta);

  if (delta == 0 || 2 * st.D >= i + 1) {
    st.tau_hat = shifted(st.tau_hat, 1);
  } else {
    st.tau_hat = st.sigma_hat;
    st.beta = delta;
    st.D = i + 1 - st.D;
    st.C = i;
  }
  st.sigma_hat = trimmed(std::move(next));
  st.tau_hat = trimmed(std::move(st.tau_hat));
  st.i = i + 1;
}

InversionlessBmState bm_run_inversionless(const Arith& ar, const SyndromeSet& syn) {
  InversionlessBmState st;
  for (int i = 0; i < syn.count(); ++i) bm_step_inversionless(ar, st, syn);
  return st;
}

Poly bm_omega(const Arith& ar, const Poly& sigma, const SyndromeSet& syn) {
  const int e = degree(sigma);
  const Elem s0 = coeff(sigma, 0);
  Poly omega(static_cast<std::size_t>(std::max(e, 0)), 0);
  for (int i = 0; i < e; ++i) {
    Elem acc = s0 == 1 ? syn.S(i + 1) : ar.mul(syn.S(i + 1), s0);
    for (int j = 1; j <= i; ++j) acc = ar.add(acc, ar.mul(syn.S(i + 1 - j), coeff(sigma, j)));
    omega[static_cast<std::size_t>(i)] = acc;
  }
  return omega;
}

std::vector<Elem> bm_values_tau(const Arith& ar, const BmState& st, int d, const Poly& dsigma,
                                const std::vector<Elem>& inverse_roots) {
  std::vector<Elem> out;
  for (Elem xi : inverse_roots) {
    const Elem den = ar.mul(poly_eval(ar, dsigma, xi), poly_eval(ar, st.tau, xi));
    out.push_back(ar.div(ar.pow(xi, d - 2), den));
  }
  return out;
}

std::vector<Elem> bm_values_horiguchi(const Arith& ar, const BmState& st, const Poly& dsigma,
                                      const std::vector<Elem>& inverse_roots) {
  std::vector<Elem> out;
  for (Elem xi : inverse_roots) {
    const Elem num = ar.mul(ar.pow(xi, st.C), st.c_delta);
    const Elem den = ar.mul(poly_eval(ar, dsigma, xi), poly_eval(ar, st.c_sigma, xi));
    out.push_back(ar.div(num, den));
  }
  return out;
}

std::vector<Elem> bm_values_tau_scaled(const Arith& ar, const InversionlessBmState& st, int d,
                                       const Poly& dsigma_hat, const std::vector<Elem>& inverse_roots) {
  const Elem scale = ar.mul(st.b_product, st.beta);
  std::vector<Elem> out;
  for (Elem xi : inverse_roots) {
    const Elem num = ar.mul(scale, ar.pow(xi, d - 2));
    const Elem den = ar.mul(poly_eval(ar, dsigma_hat, xi), poly_eval(ar, st.tau_hat, xi));
    out.push_back(ar.div(num, den));
  }
  return out;
}

namespace {

// Shared tail of both BM pipelines: the D/degree gates then Chien and values.
bool bm_gates(const SyndromeSet& syn, const Poly& sigma, int D, bool gates, DecodeResult& res) {
  res.e_tilde = degree(sigma);
  if (D > syn.t()) {
    res.outcome = DecodeOutcome::failure(FailureReason::TooManyErrors);
    return false;
  }
  if (gates && degree(sigma) != D) {
    res.outcome = DecodeOutcome::failure(FailureReason::DegreeMismatch);
    return false;
  }
  return true;
}

}  // namespace

DecodeResult bm_decode(const CodeSpec& spec, const Word& r, const DecodeOptions& opt, BmTrace* trace) {
  DecodeResult res;
  res.syndromes = compute_syndromes(spec, r);
  const SyndromeSet& syn = res.syndromes;
  if (syn.all_zero()) {
    res.outcome = DecodeOutcome::no_error(r);
    return res;
  }
  Arith ar(spec.field(), &res.stats.locator);
  const BmState st = bm_run(ar, syn, opt.verify, trace, opt.verify ? &res.invariant_violations : nullptr);
  res.sigma = st.sigma;
  if (!bm_gates(syn, st.sigma, st.D, opt.gates, res)) return res;

  ar.attach(&res.stats.values);
  ValueFormula vf = opt.values;
  if (vf != ValueFormula::Tau && vf != ValueFormula::Horiguchi) vf = ValueFormula::Forney;
  res.values_used = vf;
  const Poly dsigma = formal_derivative(st.sigma);
  res.outcome = correct_with_locator(spec, r, st.sigma, opt.gates, res, [&](const ChienResult& roots) {
    switch (vf) {
      case ValueFormula::Tau: return bm_values_tau(ar, st, spec.d(), dsigma, roots.inverse_roots);
      case ValueFormula::Horiguchi: return bm_values_horiguchi(ar, st, dsigma, roots.inverse_roots);
      default:
        res.omega = bm_omega(ar, st.sigma, syn);
        return forney(ar, dsigma, res.omega, roots.inverse_roots);
    }
  });
  return res;
}

DecodeResult bm_inv_decode(const CodeSpec& spec, const Word& r, const DecodeOptions& opt) {
  DecodeResult res;
  res.syndromes = compute_syndromes(spec, r);
  const SyndromeSet& syn = res.syndromes;
  if (syn.all_zero()) {
    res.outcome = DecodeOutcome::no_error(r);
    return res;
  }
  Arith ar(spec.field(), &res.stats.locator);
  const InversionlessBmState st = bm_run_inversionless(ar, syn);
  res.sigma = st.sigma_hat;
  if (!bm_gates(syn, st.sigma_hat, st.D, opt.gates, res)) return res;

  ar.attach(&res.stats.values);
  const ValueFormula vf = opt.values == ValueFormula::Forney ? ValueFormula::Forney : ValueFormula::Tau;
  res.values_used = vf;
  const Poly dsigma = formal_derivative(st.sigma_hat);
  res.outcome = correct_with_locator(spec, r, st.sigma_hat, opt.gates, res, [&](const ChienResult& roots) {
    if (vf == ValueFormula::Forney) {
      res.omega = bm_omega(ar, st.sigma_hat, syn);
      return forney(ar, dsigma, res.omega, roots.inverse_roots);
    }
    return bm_values_tau_scaled(ar, st, spec.d(), dsigma, roots.inverse_roots);
  });
  return res;
}

}  // namespace rslab
