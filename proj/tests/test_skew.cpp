#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skewfq/error.hpp"
#include "skewfq/parse.hpp"
#include "skewfq/random.hpp"
#include "skewfq/skew.hpp"

using namespace skewfq;

namespace {

FrobeniusTwist F(std::uint32_t p, unsigned n, unsigned power = 1) { return FrobeniusTwist{make_field(p, n), power}; }
DerivationTwist D(std::uint32_t p, unsigned m) { return DerivationTwist{make_trunc_ring(p, m)}; }

FieldSkew S(const FrobeniusTwist& tw, const char* s) { return parse_field_skew(s, tw); }
TruncSkew S(const DerivationTwist& tw, const char* s) { return parse_trunc_skew(s, tw); }
FqElem E(const FrobeniusTwist& tw, const char* s) { return parse_field_elem(s, tw.field); }
TruncElem E(const DerivationTwist& tw, const char* s) { return parse_trunc_elem(s, tw.ring); }

// x^y = theta(y) x y^-1 for the Frobenius twist.
FqElem conj(const FrobeniusTwist& tw, const FqElem& x, const FqElem& y) { return tw.sigma(y) * x * inverse(y); }

}  // namespace

TEST(SkewMul, Examples) {
  const auto tw = F(2, 2);
  EXPECT_EQ(S(tw, "t") * S(tw, "a"), S(tw, "(a+1)*t"));
  EXPECT_EQ(S(tw, "t^2+a*t+1") * S(tw, "t+a"), S(tw, "t^3+a"));
  const auto dt = D(3, 3);
  EXPECT_EQ(S(dt, "t") * S(dt, "u"), S(dt, "u*t+1"));
}

TEST(SkewMul, MatchesCoefficientwiseOracle) {
  Sampler rng(31);
  for (const auto& tw : {F(2, 2), F(2, 3), F(3, 2), F(2, 3, 2), F(5, 2)}) {
    for (int i = 0; i < 60; ++i) {
      const auto f = rng.skew(tw, rng.below(5));
      const auto g = rng.skew(tw, rng.below(5));
      const auto fg = f * g;
      EXPECT_EQ(fg, oracle::skew_mul(f, g));
      EXPECT_EQ(fg.degree(), f.degree() + g.degree());
    }
  }
}

TEST(SkewMul, RingAxiomsOverFields) {
  Sampler rng(32);
  for (const auto& tw : {F(2, 2), F(3, 2), F(2, 3, 2)}) {
    for (int i = 0; i < 50; ++i) {
      const auto f = rng.skew(tw, rng.below(4));
      const auto g = rng.skew(tw, rng.below(4));
      const auto h = rng.skew(tw, rng.below(4));
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_EQ((f + g) * h, f * h + g * h);
    }
  }
}

TEST(SkewMul, RingAxiomsOverTruncatedRingsWithLeibnizDerivation) {
  Sampler rng(33);
  for (const auto& tw : {D(3, 3), D(2, 2), D(2, 4), D(3, 6)}) {
    for (int i = 0; i < 40; ++i) {
      const auto f = rng.skew(tw, rng.below(4));
      const auto g = rng.skew(tw, rng.below(4));
      const auto h = rng.skew(tw, rng.below(4));
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_EQ((f + g) * h, f * h + g * h);
    }
  }
}

TEST(SkewMul, AssociativityBreaksWhenDerivationIsNotLeibniz) {
  const auto tw = D(3, 2);
  const auto t = S(tw, "t");
  const auto u = S(tw, "u");
  EXPECT_NE((t * u) * u, t * (u * u));
}

TEST(SkewMul, TwistMismatchIsRejected) {
  const Field f = make_field(2, 3);
  const FieldSkew a(FrobeniusTwist{f, 1}, {f->one(), f->one()});
  const FieldSkew b(FrobeniusTwist{f, 2}, {f->one(), f->one()});
  try {
    (void)(a * b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TwistMismatch);
  }
  // theta^4 and theta agree on F_8.
  EXPECT_NO_THROW((void)(a * FieldSkew(FrobeniusTwist{f, 4}, {f->one(), f->one()})));
}

TEST(SkewDivision, Examples) {
  const auto tw = F(2, 2);
  const auto [q, r] = right_divmod(S(tw, "t^3+a"), S(tw, "t+a"));
  EXPECT_EQ(q, S(tw, "t^2+a*t+1"));
  EXPECT_TRUE(r.is_zero());
  const auto f = S(tw, "t^2+a*t+(a+1)");
  EXPECT_EQ(right_divmod(f, S(tw, "t")).second, S(tw, "a+1"));
  EXPECT_EQ(right_divmod(S(tw, "t^2+t+1"), S(tw, "t+1")).second, S(tw, "1"));

  const auto [lq, lr] = left_divmod(S(tw, "t^3+t"), S(tw, "t"));
  EXPECT_EQ(lq, S(tw, "t^2+1"));
  EXPECT_TRUE(lr.is_zero());
  EXPECT_EQ(left_divmod(f, S(tw, "1")).first, f);
  // t + a divides t^3 + a on both sides, with different cofactors.
  const auto [lq2, lr2] = left_divmod(S(tw, "t^3+a"), S(tw, "t+a"));
  EXPECT_EQ(lq2, S(tw, "t^2+(a+1)*t+1"));
  EXPECT_TRUE(lr2.is_zero());
  EXPECT_EQ(oracle::skew_mul(S(tw, "t+a"), lq2), S(tw, "t^3+a"));
  EXPECT_FALSE(left_divmod(S(tw, "t^3+a"), S(tw, "t+1")).second.is_zero());
}

TEST(SkewDivision, NonMonicDivisorIsRejected) {
  const auto tw = F(2, 2);
  EXPECT_THROW((void)right_divmod(S(tw, "t^3+a"), S(tw, "a*t+1")), Error);
  EXPECT_THROW((void)right_divmod(S(tw, "t^3+a"), FieldSkew(tw)), Error);
}

TEST(SkewDivision, IdentitiesOnRandomPairs) {
  Sampler rng(34);
  for (const auto& tw : {F(2, 2), F(3, 2), F(2, 3)}) {
    for (int i = 0; i < 80; ++i) {
      const auto f = rng.skew(tw, rng.below(7));
      const auto g = rng.skew(tw, rng.below(4), true);
      const auto [q, r] = right_divmod(f, g);
      EXPECT_EQ(q * g + r, f);
      EXPECT_LT(r.degree(), g.degree());
      const auto [lq, lr] = left_divmod(f, g);
      EXPECT_EQ(g * lq + lr, f);
      EXPECT_LT(lr.degree(), g.degree());
    }
  }
  const auto dt = D(3, 3);
  for (int i = 0; i < 80; ++i) {
    const auto f = rng.skew(dt, rng.below(6));
    const auto g = rng.skew(dt, rng.below(4));
    const auto [q, r] = right_divmod(f, g);
    EXPECT_EQ(q * g + r, f);
    EXPECT_LT(r.degree(), g.degree());
  }
}

TEST(SkewGcd, Examples) {
  const auto tw = F(2, 2);
  const auto f = S(tw, "a*t^2+1");
  EXPECT_EQ(rgcd(f, FieldSkew(tw)), make_monic(f));
  EXPECT_EQ(rgcd(S(tw, "t^3+a"), S(tw, "t+a")), S(tw, "t+a"));
  EXPECT_TRUE(rgcd(S(tw, "t+a"), S(tw, "t+1")).is_one());
}

TEST(SkewLlclm, Examples) {
  const auto tw = F(2, 2);
  const auto f = S(tw, "t^2+a*t+1");
  EXPECT_EQ(llclm(f, f), f);
  for (const auto& a : tw.field->elements()) {
    for (const auto& b : tw.field->elements()) {
      if (a == b) continue;
      const auto expected = FieldSkew::linear(tw, conj(tw, b, b - a)) * FieldSkew::linear(tw, a);
      EXPECT_EQ(llclm(FieldSkew::linear(tw, a), FieldSkew::linear(tw, b)), expected);
    }
    const auto fa = evaluate(f, a);
    ASSERT_FALSE(fa.is_zero());
    EXPECT_EQ(llclm(f, FieldSkew::linear(tw, a)), FieldSkew::linear(tw, conj(tw, a, fa)) * f);
  }
}

TEST(SkewLlclm, DegreeLawAndCommonMultiple) {
  Sampler rng(35);
  for (const auto& tw : {F(2, 2), F(2, 3)}) {
    for (int i = 0; i < 80; ++i) {
      const auto f = rng.skew(tw, 1 + rng.below(4));
      const auto g = rng.skew(tw, 1 + rng.below(4));
      const auto m = llclm(f, g);
      const auto d = rgcd(f, g);
      EXPECT_EQ(m.degree() + d.degree(), f.degree() + g.degree());
      EXPECT_TRUE(right_divmod(m, make_monic(f)).second.is_zero());
      EXPECT_TRUE(right_divmod(m, make_monic(g)).second.is_zero());
      EXPECT_TRUE(right_divmod(f, d).second.is_zero());
      EXPECT_TRUE(right_divmod(g, d).second.is_zero());
    }
  }
}

TEST(SkewEval, Examples) {
  const auto tw = F(2, 2);
  const auto a = tw.field->generator();
  EXPECT_TRUE(evaluate(S(tw, "t^3+a"), a).is_zero());
  for (const auto& c : tw.field->elements()) {
    EXPECT_EQ(evaluate(FieldSkew::constant(tw, a), c), a);
  }
  EXPECT_EQ(evaluate(S(tw, "t^2"), a), tw.field->one());
}

TEST(SkewEval, MatchesNormSumOracle) {
  Sampler rng(36);
  for (const auto& tw : {F(2, 2), F(3, 2), F(2, 3, 2), F(2, 4)}) {
    for (int i = 0; i < 30; ++i) {
      const auto f = rng.skew(tw, rng.below(7));
      for (const auto& c : tw.field->elements()) EXPECT_EQ(evaluate(f, c), oracle::eval_by_norms(f, c));
    }
  }
}

TEST(SkewEval, ProductFormulaWithConjugation) {
  Sampler rng(37);
  const auto tw = F(3, 2);
  for (int i = 0; i < 40; ++i) {
    const auto f = rng.skew(tw, rng.below(4));
    const auto g = rng.skew(tw, rng.below(4));
    for (const auto& c : tw.field->elements()) {
      const auto gc = evaluate(g, c);
      if (gc.is_zero()) {
        EXPECT_TRUE(evaluate(f * g, c).is_zero());
      } else {
        EXPECT_EQ(evaluate(f * g, c), evaluate(f, conj(tw, c, gc)) * gc);
      }
    }
  }
}

TEST(SkewNorms, QuotientSequence) {
  const auto tw = F(2, 2);
  const auto t = FieldSkew::variable(tw);
  for (const auto& a : tw.field->elements()) {
    const auto seq = norm_quotient_sequence(tw, a, 5);
    ASSERT_EQ(seq.size(), 6U);
    EXPECT_TRUE(seq[1].quotient.is_one());
    EXPECT_EQ(seq[1].norm, a);
    FieldSkew ti = FieldSkew::constant(tw, tw.one());
    for (std::size_t i = 0; i < seq.size(); ++i, ti = ti * t) {
      EXPECT_EQ(seq[i].norm, skew_norm(tw, a, i));
      EXPECT_EQ(seq[i].quotient * FieldSkew::linear(tw, a) + FieldSkew::constant(tw, seq[i].norm), ti);
    }
  }
}

TEST(SkewNorms, QuotientDifferenceIdentity) {
  const auto tw = F(2, 2);
  for (const auto& a : tw.field->elements()) {
    const auto seq = norm_quotient_sequence(tw, a, 4);
    for (const auto& b : tw.field->elements()) {
      for (std::size_t i = 0; i <= 4; ++i) {
        // q(T_b)(b - a) with T_b(x) = theta(x) b.
        FqElem acc = tw.zero();
        FqElem power = b - a;
        for (const auto& c : seq[i].quotient.coeffs()) {
          acc += c * power;
          power = apply_T(tw, b, power);
        }
        EXPECT_EQ(skew_norm(tw, b, i) - skew_norm(tw, a, i), acc);
      }
    }
  }
}

TEST(SkewDuo, Multipliers) {
  const auto tw = F(2, 2);
  const auto a = tw.field->generator();
  for (const auto& b : tw.field->elements()) {
    EXPECT_EQ(duo_multiplier(tw, tw.one(), b), b);
    EXPECT_TRUE(duo_multiplier(tw, tw.zero(), b).is_zero());
  }
  EXPECT_EQ(duo_multiplier(tw, a, tw.one()), a);
  const auto dt = D(3, 3);
  try {
    (void)duo_multiplier(dt, E(dt, "u^2"), dt.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDuo);
  }
}

TEST(SkewChain, MatchesEuclideanLlclm) {
  const auto tw = F(2, 2);
  const auto a = tw.field->generator();
  const auto g = S(tw, "t+1");
  const auto res = llclm_linear_chain(g, {a});
  EXPECT_EQ(res.llclm.degree(), 2);
  EXPECT_EQ(res.llclm, llclm(g, S(tw, "t+a")));

  const auto h = S(tw, "t^3+a");
  EXPECT_EQ(llclm_linear_chain(h, {a}).chain_multiple, h);

  Sampler rng(38);
  const auto tw9 = F(3, 2);
  for (int i = 0; i < 30; ++i) {
    const auto f = rng.skew(tw9, 1 + rng.below(3), true);
    std::vector<FqElem> roots;
    for (std::size_t k = 0; k < 1 + rng.below(3); ++k) roots.push_back(rng.element(tw9.field));
    const auto chain = llclm_linear_chain(f, roots);
    EXPECT_EQ(chain.llclm, llclm(f, chain.linear_product));
    EXPECT_TRUE(right_divmod(chain.chain_multiple, chain.llclm).second.is_zero());
  }
}

TEST(SkewMinVanishing, Examples) {
  const auto g4 = min_vanishing(make_field(2, 2));
  EXPECT_EQ(g4.polynomial, S(F(2, 2), "t^3+t"));
  EXPECT_TRUE(g4.matches_closed_form);
  EXPECT_TRUE(g4.invariant);
  for (const auto& c : g4.polynomial.twist().field->elements()) EXPECT_TRUE(evaluate(g4.polynomial, c).is_zero());
  EXPECT_EQ(min_vanishing(make_field(2, 1)).polynomial, S(F(2, 1), "t^2-t"));
  const auto g9 = min_vanishing(make_field(3, 2));
  EXPECT_EQ(g9.polynomial, S(F(3, 2), "t^5-t"));
  EXPECT_TRUE(g9.invariant);
}

TEST(SkewFrobeniusLaw, Examples) {
  const auto tw = D(3, 3);
  const auto law = frobenius_law_check(tw, E(tw, "u"));
  EXPECT_EQ(law.lhs, S(tw, "t^3"));
  EXPECT_TRUE(law.equal);
  EXPECT_TRUE(law.derivation_is_leibniz);
  for (const auto& ring : {D(3, 3), D(2, 2)}) {
    const auto zero = frobenius_law_check(ring, ring.zero());
    EXPECT_TRUE(zero.equal);
    EXPECT_EQ(zero.rhs, zero.lhs);
  }
  const auto two = D(2, 2);
  const auto law1 = frobenius_law_check(two, two.one());
  EXPECT_EQ(law1.lhs, S(two, "t^2+1"));
  EXPECT_TRUE(law1.equal);
}

TEST(SkewFrobeniusLaw, HoldsOnEveryElementWhenDerivationIsLeibniz) {
  for (const auto& tw : {D(3, 3), D(2, 2), D(2, 4)}) {
    for (const auto& a : tw.ring->elements()) {
      const auto law = frobenius_law_check(tw, a);
      EXPECT_TRUE(law.equal) << to_string(a);
    }
  }
}

TEST(SkewFrobeniusLaw, FailsForLengthTwoInCharacteristicThree) {
  const auto tw = D(3, 2);
  const auto law = frobenius_law_check(tw, E(tw, "u"));
  EXPECT_FALSE(law.derivation_is_leibniz);
  EXPECT_EQ(law.lhs, S(tw, "t^3"));
  EXPECT_EQ(law.rhs, S(tw, "t^3+2*u"));
  EXPECT_FALSE(law.equal);
}

TEST(SkewPrinting, RoundTrip) {
  Sampler rng(39);
  for (const auto& tw : {F(2, 2), F(3, 2), F(2, 3)}) {
    for (int i = 0; i < 40; ++i) {
      const auto f = rng.skew(tw, rng.below(7));
      EXPECT_EQ(parse_field_skew(to_string(f), tw), f) << to_string(f);
    }
  }
  const auto dt = D(3, 3);
  for (int i = 0; i < 40; ++i) {
    const auto f = rng.skew(dt, rng.below(5));
    EXPECT_EQ(parse_trunc_skew(to_string(f), dt), f) << to_string(f);
  }
  EXPECT_EQ(to_string(S(F(2, 2), "t^2+a*t+a^2")), "t^2+a*t+a+1");
}
