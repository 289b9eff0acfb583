#include <gtest/gtest.h>

#include <random>
#include <set>

#include "skewfq/cpoly.hpp"
#include "skewfq/error.hpp"
#include "skewfq/parse.hpp"
#include "skewfq/random.hpp"

using namespace skewfq;

namespace {

CPoly P(const Field& f, const char* s) { return parse_cpoly(s, f); }

CPoly random_cpoly(Sampler& rng, const Field& f, std::size_t max_degree) {
  std::vector<FqElem> c;
  const std::size_t d = rng.below(max_degree + 1);
  for (std::size_t i = 0; i < d; ++i) c.push_back(rng.element(f));
  c.push_back(rng.nonzero(f));
  return CPoly(f, std::move(c));
}

std::vector<CPoly> all_monic(const Field& f, std::size_t d) {
  std::vector<CPoly> out;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= f->order();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<FqElem> c;
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < d; ++i, rest /= f->order()) c.push_back(f->element(rest % f->order()));
    c.push_back(f->one());
    out.emplace_back(f, std::move(c));
  }
  return out;
}

bool has_proper_divisor_by_trial(const CPoly& g) {
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(g.degree()); ++d) {
    for (const auto& h : all_monic(g.field(), d)) {
      if (divmod(g, h).second.is_zero()) return true;
    }
  }
  return false;
}

}  // namespace

TEST(CArith, Examples) {
  const Field f = make_field(2, 2);
  const CPoly xa = P(f, "x+a");
  EXPECT_EQ(xa * xa, P(f, "x^2+a+1"));
  EXPECT_EQ(xa * CPoly::constant(f->one()), xa);
  const auto [q, r] = divmod(P(f, "x^7+a"), P(f, "x^3+a*x+1"));
  EXPECT_LT(r.degree(), 3);
  EXPECT_EQ(q * P(f, "x^3+a*x+1") + r, P(f, "x^7+a"));
}

TEST(CArith, DivisionByZeroFails) {
  const Field f = make_field(3, 1);
  try {
    divmod(P(f, "x+1"), CPoly(f));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(CArith, DivisionIdentityOnRandomPairs) {
  Sampler rng(21);
  for (const Field& f : {make_field(2, 2), make_field(3, 2), make_field(5, 1)}) {
    for (int i = 0; i < 100; ++i) {
      const CPoly a = random_cpoly(rng, f, 8);
      const CPoly b = random_cpoly(rng, f, 4);
      const auto [q, r] = divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

TEST(CGcd, Examples) {
  const Field f = make_field(2, 2);
  const CPoly g = P(f, "a*x+1");
  EXPECT_EQ(gcd(g, CPoly(f)), monic(g));
  EXPECT_EQ(gcd(P(f, "(x+1)*(x+a)"), P(f, "x+1")), P(f, "x+1"));
  EXPECT_TRUE(gcd(P(f, "x^2+x+a"), P(f, "x^2+x+a+1")).is_one());
}

TEST(CFactorize, GoldenExamples) {
  const Field f = make_field(2, 2);
  const auto fa = factorize(P(f, "x^7+a"));
  EXPECT_TRUE(std::any_of(fa.factors.begin(), fa.factors.end(), [&](const CFactor& c) { return c.factor == P(f, "x+a"); }));
  const auto fb = factorize(P(f, "x^15+(a+1)*x^7+(a+1)*x^3+(1+a)*x+1"));
  EXPECT_TRUE(std::any_of(fb.factors.begin(), fb.factors.end(),
                          [&](const CFactor& c) { return c.factor == P(f, "x^3+a*x+1"); }));
  const auto sq = factorize(P(f, "x^2"));
  ASSERT_EQ(sq.factors.size(), 1U);
  EXPECT_EQ(sq.factors[0].factor, P(f, "x"));
  EXPECT_EQ(sq.factors[0].multiplicity, 2U);
}

TEST(CFactorize, ReconstructsAndFactorsAreIrreducible) {
  Sampler rng(22);
  for (const Field& f : {make_field(2, 2), make_field(3, 2)}) {
    for (int i = 0; i < 60; ++i) {
      const CPoly g = random_cpoly(rng, f, 8);
      const auto fz = factorize(g);
      EXPECT_EQ(fz.product(), g);
      for (const auto& c : fz.factors) {
        EXPECT_TRUE(c.factor.is_monic());
        if (c.factor.degree() <= 4) EXPECT_FALSE(has_proper_divisor_by_trial(c.factor)) << to_string(c.factor);
      }
      for (std::size_t j = 1; j < fz.factors.size(); ++j) {
        EXPECT_TRUE(canonical_less(fz.factors[j - 1].factor, fz.factors[j].factor));
      }
    }
  }
}

TEST(CFactorize, HandlesPthPowers) {
  const Field f = make_field(3, 2);
  const CPoly g = P(f, "(x^2+a)^3*(x+1)^4*(x+a)");
  const auto fz = factorize(g);
  EXPECT_EQ(fz.product(), g);
  std::map<std::string, unsigned> mult;
  for (const auto& c : fz.factors) mult[to_string(c.factor)] = c.multiplicity;
  EXPECT_EQ(mult["x+1"], 4U);
  EXPECT_EQ(mult["x+a"], 1U);
}

TEST(CIrreducible, MatchesTrialDivisionForSmallDegrees) {
  const Field f = make_field(2, 2);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (const auto& g : all_monic(f, d)) EXPECT_EQ(is_irreducible(g), !has_proper_divisor_by_trial(g)) << to_string(g);
  }
}

TEST(CRoots, Examples) {
  const Field f = make_field(2, 2);
  EXPECT_EQ(roots(P(f, "x^7+a")), std::vector<FqElem>{f->generator()});
  EXPECT_TRUE(roots(P(f, "x^3+a*x+1")).empty());
  EXPECT_TRUE(roots(P(f, "1")).empty());
}

TEST(CRoots, ExhaustiveAgreement) {
  Sampler rng(23);
  for (const Field& f : {make_field(2, 2), make_field(2, 3), make_field(3, 2), make_field(2, 4)}) {
    for (int i = 0; i < 30; ++i) {
      const CPoly g = random_cpoly(rng, f, 6);
      std::vector<FqElem> expected;
      for (const auto& c : f->elements()) {
        if (g(c).is_zero()) expected.push_back(c);
      }
      EXPECT_EQ(roots(g), expected);
    }
  }
}

TEST(CDivisors, Examples) {
  const Field f = make_field(2, 2);
  const CPoly irr = P(f, "x^2+x+a");
  EXPECT_EQ(divisors(irr), (std::vector<CPoly>{CPoly::constant(f->one()), irr}));
  EXPECT_EQ(divisors(P(f, "(x+1)^2*(x+a)")).size(), 6U);
  DivisorQuery q;
  q.predicate = [](const CPoly& h) { return is_bracket(h, 2); };
  const auto brackets = divisors(P(f, "x^15+(a+1)*x^7+(a+1)*x^3+(1+a)*x+1"), q);
  EXPECT_TRUE(std::find(brackets.begin(), brackets.end(), P(f, "x^3+a*x+1")) != brackets.end());
}

TEST(CDivisors, AllDivisorsInOrderMatchTrialDivision) {
  const Field f = make_field(2, 2);
  const CPoly g = P(f, "(x+1)^2*(x+a)*(x^2+x+a)");
  const auto ds = divisors(g);
  std::vector<CPoly> expected;
  for (std::size_t d = 0; d <= static_cast<std::size_t>(g.degree()); ++d) {
    for (const auto& h : all_monic(f, d)) {
      if (divmod(g, h).second.is_zero()) expected.push_back(h);
    }
  }
  std::sort(expected.begin(), expected.end(), canonical_less);
  EXPECT_EQ(ds, expected);
}

TEST(CDivisors, CapOverflowIsAnError) {
  const Field f = make_field(2, 2);
  DivisorQuery q;
  q.cap = 3;
  q.require_complete = true;
  q.predicate = [](const CPoly&) { return false; };
  try {
    divisors(P(f, "(x+1)*(x+a)*(x+a+1)*x"), q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeOverflow);
  }
}

TEST(Brackets, IndicesAndRecognition) {
  const Field f2 = make_field(2, 2);
  const Field f3 = make_field(3, 1);
  EXPECT_TRUE(is_bracket(P(f2, "x^7+a"), 2));
  EXPECT_FALSE(is_bracket(P(f2, "x^2+1"), 2));
  EXPECT_TRUE(is_bracket(P(f3, "x^13+x^4+1"), 3));
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const Field f = make_field(p, 1);
    for (unsigned i = 0; i <= 6; ++i) {
      std::uint64_t expected = 0;
      for (unsigned j = 0; j < i; ++j) expected = expected * p + 1;
      EXPECT_EQ(bracket_index(p, i), expected);
      EXPECT_EQ(bracket_level(expected, p), i);
      EXPECT_TRUE(is_bracket(CPoly::monomial(f->one(), expected), p));
    }
  }
  const auto support = bracket_support(P(f3, "x^13+2*x^4+1"), 3);
  ASSERT_EQ(support.terms.size(), 3U);
  EXPECT_EQ(support.terms[1].level, 2U);
  EXPECT_EQ(support.terms[1].coeff, f3->constant(2));
}

TEST(CPrinting, RoundTrip) {
  Sampler rng(24);
  for (const Field& f : {make_field(2, 2), make_field(3, 2), make_field(2, 3)}) {
    for (int i = 0; i < 50; ++i) {
      const CPoly g = random_cpoly(rng, f, 8);
      EXPECT_EQ(parse_cpoly(to_string(g), f), g) << to_string(g);
    }
  }
  const Field f = make_field(2, 2);
  EXPECT_EQ(to_string(P(f, "x^15+(a+1)*x^7+(a+1)*x^3+(a+1)*x+1")), "x^15+(a+1)*x^7+(a+1)*x^3+(a+1)*x+1");
}
