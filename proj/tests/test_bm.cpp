// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rslab/bm.hpp"

using namespace rslab;

namespace {

const oracle::Gf ref = oracle::gf16();

Elem a(int k) { return ref.alpha(k); }

Word three_errors() { return oracle::word_from_terms(ref, 15, {{2, 2}, {8, 1}, {13, 7}}); }
Word four_errors() { return oracle::word_from_terms(ref, 15, {{0, 6}, {1, 3}, {2, 4}, {7, 0}}); }
Word wrong_degree() { return oracle::word_from_terms(ref, 15, {{1, 3}, {2, 1}, {10, 0}}); }

// x^k with coefficient c as a dense polynomial.
Poly mono(int k, Elem c) {
  Poly p(static_cast<std::size_t>(k + 1), 0);
  p.back() = c;
  return p;
}

Elem at(const oracle::Poly& p, int k) { return k >= 0 && k < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(k)] : 0; }

// x * gamma as an ordinary polynomial (gamma has no term below x^{-1}).
oracle::Poly x_gamma(const Laurent& g) {
  REQUIRE(g.low >= -1);
  oracle::Poly p(static_cast<std::size_t>(g.low + 1) + g.coeffs.size(), 0);
  for (std::size_t k = 0; k < g.coeffs.size(); ++k) p[static_cast<std::size_t>(g.low + 1) + k] = g.coeffs[k];
  return p;
}

// Checks the verify-mode identities of a state with reference arithmetic only.
void check_identities(const BmState& st, const std::vector<Elem>& s) {
  const int i = st.i;
  const oracle::Poly sS = ref.polymul(st.sigma, s);
  for (int k = 0; k < i; ++k) REQUIRE(at(sS, k) == coeff(st.omega, k));
  const oracle::Poly tS = ref.polymul(st.tau, s);
  for (int k = 0; k < i; ++k) REQUIRE((at(tS, k) ^ (k == i - 1 ? 1u : 0u)) == st.gamma.at(k));
  // x (omega tau - sigma gamma) = x^i
  const oracle::Poly lhs1 = ref.polymul(shifted(st.omega, 1), st.tau);
  const oracle::Poly lhs2 = ref.polymul(st.sigma, x_gamma(st.gamma));
  const std::size_t len = std::max(lhs1.size(), lhs2.size());
  for (int k = 0; k < static_cast<int>(len); ++k) REQUIRE((at(lhs1, k) ^ at(lhs2, k)) == (k == i ? 1u : 0u));
  REQUIRE(degree(st.sigma) <= st.D);
  REQUIRE(degree(st.tau) <= i - st.D);
  REQUIRE(degree(st.omega) <= st.D - 1);
  REQUIRE(st.gamma.degree() <= i - st.D - 1);
  REQUIRE(st.D >= 0);
  REQUIRE(st.D <= i);
}

}  // namespace

TEST_CASE("iteration table on the three-error word") {
  CodeSpec code = make_code(4, 0x13, 9);
  const SyndromeSet syn = compute_syndromes(code, three_errors());
  BmTrace trace;
  Arith ar(code.field());
  const BmState st = bm_run(ar, syn, false, &trace);
  REQUIRE(trace.iterations.size() == 9);

  const Poly final_sigma{1, a(6), a(9), a(8)};
  const std::vector<Poly> sigma{{1}, {1, a(12)}, {1}, {1}, {1, 0, 0, a(8)}, {1, a(6), 0, a(8)},
                                final_sigma, final_sigma, final_sigma};
  const std::vector<Poly> tau{{1}, {a(3)}, mono(1, a(3)), mono(2, a(3)), {a(10)},
                              mono(1, a(10)), mono(2, a(10)), mono(3, a(10)), mono(4, a(10))};
  const std::vector<int> D{0, 1, 1, 1, 3, 3, 3, 3, 3};
  const std::vector<Elem> delta{a(12), a(9), 0, a(5), a(11), a(14), 0, 0};
  for (int i = 0; i <= 8; ++i) {
    const BmIteration& it = trace.iterations[static_cast<std::size_t>(i)];
    CAPTURE(i);
    CHECK(it.i == i);
    CHECK(poly_equal(it.sigma, sigma[static_cast<std::size_t>(i)]));
    CHECK(poly_equal(it.tau, tau[static_cast<std::size_t>(i)]));
    CHECK(it.D == D[static_cast<std::size_t>(i)]);
    if (i < 8) CHECK(it.delta == delta[static_cast<std::size_t>(i)]);
  }
  CHECK(st.delta_history == delta);
  CHECK(st.D == 3);
  CHECK(st.C == 3);
  CHECK(poly_equal(st.c_sigma, Poly{1}));
  CHECK(st.c_delta == a(5));
  CHECK(poly_equal(bm_omega(ar, st.sigma, syn), Poly{a(12), a(3), a(6)}));
  CHECK(ref.inv(a(12)) == a(3));
}

TEST_CASE("zero syndromes leave the state at rest") {
  const SyndromeSet syn(std::vector<Elem>(8, 0), 4);
  const Field field_ar(4);
  Arith ar(field_ar);
  const BmState st = bm_run(ar, syn);
  CHECK(poly_equal(st.sigma, Poly{1}));
  CHECK(st.D == 0);
  for (Elem d : st.delta_history) CHECK(d == 0);
  CHECK(bm_decode(make_code(4, 0, 9), Word(15, 0)).outcome.kind == OutcomeKind::NoError);
}

TEST_CASE("single error locator") {
  CodeSpec code = make_code(4, 0x13, 9);
  Word r(15, 0);
  r[11] = a(5);
  Arith ar(code.field());
  const SyndromeSet syn = compute_syndromes(code, r);
  const BmState st = bm_run(ar, syn);
  CHECK(poly_equal(st.sigma, Poly{1, a(11)}));
  CHECK(poly_equal(bm_omega(ar, st.sigma, syn), Poly{syn.S(1)}));
}

TEST_CASE("all value formulas on the three-error word") {
  CodeSpec code = make_code(4, 0x13, 9);
  for (ValueFormula vf : {ValueFormula::Forney, ValueFormula::Tau, ValueFormula::Horiguchi}) {
    DecodeOptions opt;
    opt.values = vf;
    const DecodeResult res = bm_decode(code, three_errors(), opt);
    REQUIRE(res.outcome.kind == OutcomeKind::Corrected);
    CHECK(res.values_used == vf);
    CHECK(res.outcome.codeword == Word(15, 0));
    CHECK(res.outcome.pattern.positions == std::vector<int>{2, 8, 13});
    CHECK(res.outcome.pattern.values == std::vector<Elem>{a(2), a(1), a(7)});
    CHECK(res.stats.locator.mul <= 128);
    CHECK(res.stats.locator.inv <= 9);
    CHECK(res.stats.locator.add <= 81);
  }
  // by hand: -(X^-1)^7 / (sigma'(X^-1) tau(X^-1)) with tau = a^10 x^4
  const Poly dsigma = formal_derivative(Poly{1, a(6), a(9), a(8)});
  for (auto [pos, val] : std::vector<std::pair<int, int>>{{2, 2}, {8, 1}, {13, 7}}) {
    const Elem xi = a(15 - pos);
    const Elem den = ref.mul(ref.eval(dsigma, xi), ref.mul(a(10), ref.pow(xi, 4)));
    CHECK(ref.mul(ref.pow(xi, 7), ref.inv(den)) == a(val));
    // and the snapshot form with c = 3, sigma^(3) = 1, Delta_3 = a^5
    CHECK(ref.mul(ref.mul(ref.pow(xi, 3), a(5)), ref.inv(ref.eval(dsigma, xi))) == a(val));
  }
}

TEST_CASE("four errors on RS(15,5): degree above t and an irreducible factor") {
  CodeSpec code = make_code(4, 0x13, 5);
  const Word r = four_errors();
  CHECK(hamming_weight(r) == 4);
  BmTrace trace;
  Arith ar(code.field());
  const SyndromeSet syn = compute_syndromes(code, r);
  const BmState st = bm_run(ar, syn, false, &trace);
  CHECK(poly_equal(st.sigma, Poly{1, a(2), 0, a(9)}));
  CHECK(st.D == 3);
  CHECK(poly_equal(st.tau, Poly{a(3), a(5)}));
  CHECK(chien_search(code.field(), st.sigma).root_deficit);
  // a^9 (x + a^5)(x^2 + a^5 x + a)
  CHECK(poly_equal(ref.polymul({a(14), a(9)}, {a(1), a(5), 1}), st.sigma));

  for (bool gates : {true, false}) {
    DecodeOptions opt;
    opt.gates = gates;
    const DecodeResult res = bm_decode(code, r, opt);
    CHECK(res.outcome.kind == OutcomeKind::Failure);
    CHECK(res.outcome.reason == FailureReason::TooManyErrors);
    CHECK(res.e_tilde == 3);
  }
}

TEST_CASE("degree gate on RS(15,5)") {
  CodeSpec code = make_code(4, 0x13, 5);
  const Word r = wrong_degree();
  Arith ar(code.field());
  const SyndromeSet syn = compute_syndromes(code, r);
  CHECK(syn.values() == std::vector<Elem>{a(6), a(5), a(5), a(5)});
  BmTrace trace;
  const BmState st = bm_run(ar, syn, false, &trace);
  CHECK(st.delta_history == std::vector<Elem>{a(6), a(14), a(8), a(11)});
  CHECK(poly_equal(trace.iterations[3].sigma, Poly{1, a(14), a(2)}));
  CHECK(poly_equal(trace.iterations[3].tau, Poly{a(7), a(6)}));
  CHECK(poly_equal(st.sigma, Poly{1, 1}));
  CHECK(poly_equal(st.tau, Poly{0, a(7), a(6)}));
  CHECK(st.D == 2);

  const DecodeResult gated = bm_decode(code, r);
  CHECK(gated.outcome.kind == OutcomeKind::Failure);
  CHECK(gated.outcome.reason == FailureReason::DegreeMismatch);
  CHECK(gated.e_tilde == 1);

  DecodeOptions open;
  open.gates = false;
  const DecodeResult u = bm_decode(code, r, open);
  REQUIRE(u.outcome.kind == OutcomeKind::Corrected);
  CHECK(poly_equal(u.omega, Poly{a(6)}));
  CHECK(u.outcome.pattern.positions == std::vector<int>{0});
  CHECK(u.outcome.pattern.values == std::vector<Elem>{a(6)});
  CHECK(u.outcome.codeword == oracle::word_from_terms(ref, 15, {{0, 6}, {1, 3}, {2, 1}, {10, 0}}));
  CHECK_FALSE(is_codeword(code, u.outcome.codeword));
}

TEST_CASE("verify mode identities hold at every iteration") {
  std::mt19937_64 rng(31);
  for (int d : {3, 4, 5, 8, 9, 12, 15}) {
    CodeSpec code = make_code(4, 0, d);
    Arith ar(code.field());
    for (int trial = 0; trial < 150; ++trial) {
      const int w = static_cast<int>(rng() % 16);
      const Word r = apply_errors(encode(code, random_message(code, rng)), random_errors(code, w, rng));
      const SyndromeSet syn = compute_syndromes(code, r);
      BmState st;
      st.verify = true;
      check_identities(st, syn.values());
      std::vector<std::string> violations;
      for (int i = 0; i < syn.count(); ++i) {
        const int before = st.D;
        bm_step(ar, st, syn, &violations);
        REQUIRE(st.D >= before);
        check_identities(st, syn.values());
      }
      REQUIRE(violations.empty());
      REQUIRE(bm_check_invariants(code.field(), st, syn).empty());
    }
  }
}

TEST_CASE("invariant checker notices a corrupted state") {
  CodeSpec code = make_code(4, 0x13, 9);
  Arith ar(code.field());
  const SyndromeSet syn = compute_syndromes(code, three_errors());
  BmState st = bm_run(ar, syn, true);
  REQUIRE(bm_check_invariants(code.field(), st, syn).empty());
  st.omega[0] ^= 1;
  CHECK_FALSE(bm_check_invariants(code.field(), st, syn).empty());
}

TEST_CASE("inversionless scaling matches the plain iteration") {
  std::mt19937_64 rng(8);
  for (int d : {5, 9, 13}) {
    CodeSpec code = make_code(4, 0, d);
    for (int trial = 0; trial < 200; ++trial) {
      const int w = static_cast<int>(rng() % 8);
      const Word r = apply_errors(encode(code, random_message(code, rng)), random_errors(code, w, rng));
      const SyndromeSet syn = compute_syndromes(code, r);
      OpCounts c;
      Arith counted(code.field(), &c);
      Arith ar(code.field());
      BmState plain;
      InversionlessBmState hat;
      for (int i = 0; i < syn.count(); ++i) {
        bm_step(ar, plain, syn);
        bm_step_inversionless(counted, hat, syn);
        REQUIRE(hat.D == plain.D);
        REQUIRE(poly_equal(hat.sigma_hat, ref.polymul(plain.sigma, {hat.b_product})));
        REQUIRE(poly_equal(hat.tau_hat, ref.polymul(plain.tau, {hat.beta})));
      }
      REQUIRE(c.inv == 0);
      REQUIRE(c.div == 0);
    }
  }
}

TEST_CASE("inversionless decoder on the three-error word") {
  CodeSpec code = make_code(4, 0x13, 9);
  for (ValueFormula vf : {ValueFormula::Tau, ValueFormula::Forney}) {
    DecodeOptions opt;
    opt.values = vf;
    const DecodeResult res = bm_inv_decode(code, three_errors(), opt);
    REQUIRE(res.outcome.kind == OutcomeKind::Corrected);
    CHECK(res.outcome.pattern.positions == std::vector<int>{2, 8, 13});
    CHECK(res.outcome.pattern.values == std::vector<Elem>{a(2), a(1), a(7)});
    CHECK(res.stats.locator.inv == 0);
  }
}

TEST_CASE("value formulas, snapshot identity and bounds across random trials") {
  std::mt19937_64 rng(17);
  for (int d : {3, 5, 7, 9, 11, 15}) {
    CodeSpec code = make_code(4, 0, d);
    const int t = code.t();
    for (int trial = 0; trial < 200; ++trial) {
      const ErrorPattern p = random_errors(code, 1 + static_cast<int>(rng() % static_cast<unsigned>(t)), rng);
      const Word c = encode(code, random_message(code, rng));
      const Word r = apply_errors(c, p);
      for (ValueFormula vf : {ValueFormula::Forney, ValueFormula::Tau, ValueFormula::Horiguchi}) {
        DecodeOptions opt;
        opt.values = vf;
        opt.verify = true;
        const DecodeResult res = bm_decode(code, r, opt);
        REQUIRE(res.outcome.kind == OutcomeKind::Corrected);
        REQUIRE(res.outcome.pattern == p);
        REQUIRE(res.invariant_violations.empty());
        const auto T = static_cast<std::uint64_t>(t);
        REQUIRE(res.stats.locator.inv <= 2 * T + 1);
        REQUIRE(res.stats.locator.mul <= 6 * T * T + 7 * T + 4);
        REQUIRE(res.stats.locator.add <= 4 * T * T + 4 * T + 1);
      }
      for (ValueFormula vf : {ValueFormula::Forney, ValueFormula::Tau}) {
        DecodeOptions opt;
        opt.values = vf;
        const DecodeResult res = bm_inv_decode(code, r, opt);
        REQUIRE(res.outcome.pattern == p);
        REQUIRE(res.stats.locator.inv == 0);
      }
      BmTrace trace;
      Arith ar(code.field());
      const BmState st = bm_run(ar, compute_syndromes(code, r), false, &trace);
      REQUIRE(st.C >= 0);
      REQUIRE(st.C - trace.iterations[static_cast<std::size_t>(st.C)].D == p.weight() - 1);
      REQUIRE(degree(st.c_sigma) < degree(st.tau));
      const oracle::Poly omega = bm_omega(ar, st.sigma, compute_syndromes(code, r));
      REQUIRE(key_equation_residual(code.field(), st.sigma, omega, compute_syndromes(code, r).poly(), d));
    }
  }
}

TEST_CASE("gated outputs on heavy corruption are codewords within distance t") {
  std::mt19937_64 rng(4);
  for (int d : {3, 5, 9}) {
    CodeSpec code = make_code(4, 0, d);
    for (int trial = 0; trial < 1500; ++trial) {
      const int w = code.t() + 1 + static_cast<int>(rng() % static_cast<unsigned>(15 - code.t()));
      const Word r = apply_errors(encode(code, random_message(code, rng)), random_errors(code, w, rng));
      for (const DecodeResult& res : {bm_decode(code, r), bm_inv_decode(code, r)}) {
        if (res.outcome.kind != OutcomeKind::Corrected) continue;
        REQUIRE(is_codeword(code, res.outcome.codeword));
        REQUIRE(hamming_distance(r, res.outcome.codeword) <= code.t());
      }
    }
  }
}

TEST_CASE("Laurent helpers") {
  const Laurent g{-1, {1, 0, 3}};
  CHECK(g.degree() == 1);
  CHECK(g.at(-1) == 1);
  CHECK(g.at(0) == 0);
  CHECK(g.at(5) == 0);
  CHECK(Laurent{}.degree() == -1);
}
