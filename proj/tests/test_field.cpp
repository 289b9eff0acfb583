#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "skewfq/error.hpp"
#include "skewfq/field.hpp"
#include "skewfq/parse.hpp"

using namespace skewfq;
using oracle::NaiveField;

namespace {

const std::vector<std::pair<std::uint32_t, unsigned>> kSmallFields{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3},
                                                                   {3, 2}, {2, 4}, {5, 2}};

FqElem A(const Field& f, const char* s) { return parse_field_elem(s, f); }

// Remainder of f mod g over F_p, both as coefficient lists (constant first), g monic.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g, std::uint32_t p) {
  while (f.size() >= g.size()) {
    const std::uint32_t c = f.back();
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = (f[shift + i] + (p - c) * g[i]) % p;
    f.pop_back();
  }
  return f;
}

bool irreducible_by_trial(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> g(d + 1, 1);
      std::size_t rest = idx;
      for (std::size_t i = 0; i < d; ++i, rest /= p) g[i] = static_cast<std::uint32_t>(rest % p);
      const auto r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

TEST(MakeField, F4FromExplicitModulus) {
  const Field f = make_field(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  const FqElem a = f->generator();
  EXPECT_EQ(a * a + a + f->one(), f->zero());
  EXPECT_EQ(modulus_string(*f), "x^2+x+1");
}

TEST(MakeField, PrimeFieldHasModulusX) {
  const Field f = make_field(2, 1);
  EXPECT_EQ(modulus_string(*f), "x");
  EXPECT_EQ(f->order(), 2U);
}

TEST(MakeField, RejectsReducibleModulus) {
  try {
    make_field(2, 2, std::vector<std::uint32_t>{1, 0, 1});
    FAIL() << "x^2+1 accepted over F_2";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ReducibleModulus);
  }
}

TEST(MakeField, RejectsCompositeCharacteristic) {
  try {
    make_field(4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
}

TEST(MakeField, DefaultModulusIsSmallestIrreducibleLowDegreeFirst) {
  for (auto [p, n] : kSmallFields) {
    if (n == 1) continue;
    // Candidates ordered by (c_0, c_1, ..., c_(n-1)) lexicographically.
    std::size_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= p;
    std::vector<std::uint32_t> expected;
    for (std::size_t idx = 0; idx < count && expected.empty(); ++idx) {
      std::vector<std::uint32_t> g(n + 1, 1);
      std::size_t rest = idx;
      for (unsigned i = n; i-- > 0; rest /= p) g[i] = static_cast<std::uint32_t>(rest % p);
      if (irreducible_by_trial(g, p)) expected = g;
    }
    EXPECT_EQ(make_field(p, n)->modulus(), expected) << "p=" << p << " n=" << n;
  }
}

TEST(Arithmetic, MatchesSchoolbookOracleExhaustively) {
  for (auto [p, n] : kSmallFields) {
    const Field f = make_field(p, n);
    const NaiveField nf(f);
    for (const auto& x : f->elements()) {
      for (const auto& y : f->elements()) {
        EXPECT_EQ(NaiveField::of(x * y), nf.mul(NaiveField::of(x), NaiveField::of(y)));
        EXPECT_EQ(NaiveField::of(x + y), nf.add(NaiveField::of(x), NaiveField::of(y)));
        EXPECT_EQ(NaiveField::of(x - y), nf.sub(NaiveField::of(x), NaiveField::of(y)));
      }
    }
  }
}

TEST(Arithmetic, F4Examples) {
  const Field f = make_field(2, 2);
  const FqElem a = f->generator();
  EXPECT_EQ(a * a, A(f, "a+1"));
  EXPECT_EQ(a * f->one(), a);
  // Oracle: the unique y with a y = 1, by search.
  FqElem found = f->zero();
  for (const auto& y : f->elements()) {
    if ((a * y).is_one()) found = y;
  }
  EXPECT_EQ(inverse(a), found);
  EXPECT_EQ(found, A(f, "a+1"));
}

TEST(Arithmetic, InverseOfZeroFails) {
  const Field f = make_field(3, 2);
  try {
    inverse(f->zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
  }
}

TEST(Arithmetic, MixedFieldsAreRejected) {
  const Field f4 = make_field(2, 2);
  const Field f8 = make_field(2, 3);
  try {
    (void)(f4->generator() + f8->generator());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
}

TEST(Arithmetic, PowAndInverseAgreeWithOracle) {
  for (auto [p, n] : kSmallFields) {
    const Field f = make_field(p, n);
    const NaiveField nf(f);
    for (const auto& x : f->elements()) {
      for (std::uint64_t e : {0ULL, 1ULL, 2ULL, 5ULL, 13ULL}) EXPECT_EQ(NaiveField::of(pow(x, e)), nf.pow(NaiveField::of(x), e));
      if (!x.is_zero()) EXPECT_TRUE((x * inverse(x)).is_one());
    }
  }
}

TEST(Frobenius, F4Examples) {
  const Field f = make_field(2, 2);
  const FqElem a = f->generator();
  EXPECT_EQ(frobenius(a, 1), A(f, "a+1"));
  EXPECT_EQ(frobenius(a, 2), a);
  for (const auto& x : f->elements()) EXPECT_EQ(frobenius(x, 0), x);
}

TEST(Frobenius, IsAnAutomorphismOfOrderN) {
  for (auto [p, n] : kSmallFields) {
    const Field f = make_field(p, n);
    const NaiveField nf(f);
    for (const auto& x : f->elements()) {
      EXPECT_EQ(frobenius(x, n), x);
      EXPECT_EQ(NaiveField::of(frobenius(x, 1)), nf.pow(NaiveField::of(x), p));
      EXPECT_EQ(frobenius_inverse(frobenius(x, 1), 1), x);
      for (const auto& y : f->elements()) {
        EXPECT_EQ(frobenius(x + y, 1), frobenius(x, 1) + frobenius(y, 1));
        EXPECT_EQ(frobenius(x * y, 1), frobenius(x, 1) * frobenius(y, 1));
      }
    }
    // theta^k != id for 0 < k < n.
    for (unsigned k = 1; k < n; ++k) EXPECT_NE(frobenius(f->generator(), k), f->generator());
  }
}

TEST(Norm, F4Examples) {
  const Field f = make_field(2, 2);
  const FqElem a = f->generator();
  EXPECT_TRUE(norm(a, 0).is_one());
  EXPECT_TRUE(norm(a, 2).is_one());
  EXPECT_EQ(norm(a, 3), a);
}

TEST(Norm, Recursion) {
  for (auto [p, n] : kSmallFields) {
    const Field f = make_field(p, n);
    for (const auto& a : f->elements()) {
      for (unsigned i = 0; i <= 2 * n; ++i) EXPECT_EQ(norm(a, i + 1), frobenius(a, i) * norm(a, i));
    }
  }
}

TEST(Conjugation, Examples) {
  const Field f = make_field(2, 2);
  const FqElem a = f->generator();
  EXPECT_EQ(conjugate(a, f->one()), a);
  EXPECT_EQ(conjugate(f->one(), a), a);
  for (const auto& x : f->elements()) {
    if (!x.is_zero()) EXPECT_TRUE(conjugate(f->zero(), x).is_zero());
  }
  try {
    conjugate(a, f->zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
  }
}

TEST(Conjugation, ComposesAsAnAction) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    const Field f = make_field(p, n);
    for (const auto& a : f->elements()) {
      for (const auto& x : f->elements()) {
        if (x.is_zero()) continue;
        for (const auto& y : f->elements()) {
          if (!y.is_zero()) EXPECT_EQ(conjugate(conjugate(a, x), y), conjugate(a, y * x));
        }
      }
    }
  }
}

TEST(ConjugacyClasses, PartitionWithPClasses) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {2, 1}}) {
    const Field f = make_field(p, n);
    const auto classes = conjugacy_classes(f);
    ASSERT_EQ(classes.size(), p);
    std::set<std::uint64_t> seen;
    std::size_t total = 0;
    for (const auto& c : classes) {
      total += c.members.size();
      for (const auto& m : c.members) EXPECT_TRUE(seen.insert(m.index()).second);
      // Oracle: the class of the representative by direct conjugation.
      std::set<std::uint64_t> orbit;
      for (const auto& x : f->elements()) {
        if (!x.is_zero()) orbit.insert(conjugate(c.representative, x).index());
      }
      std::set<std::uint64_t> members;
      for (const auto& m : c.members) members.insert(m.index());
      EXPECT_EQ(orbit, members);
    }
    EXPECT_EQ(total, f->order());
    EXPECT_EQ(classes.front().members.size(), 1U);  // {0}
    EXPECT_EQ(classes[1].members.size(), (f->order() - 1) / (p - 1));
  }
}

TEST(ConjugacyClasses, F4Listing) {
  const Field f = make_field(2, 2);
  const auto classes = conjugacy_classes(f);
  ASSERT_EQ(classes.size(), 2U);
  EXPECT_EQ(classes[0].members, std::vector<FqElem>{f->zero()});
  EXPECT_EQ(classes[1].members, (std::vector<FqElem>{f->one(), A(f, "a"), A(f, "a+1")}));
}

TEST(Centralizer, FullFieldAtZeroPrimeFieldElsewhere) {
  for (auto [p, n] : kSmallFields) {
    const Field f = make_field(p, n);
    for (const auto& a : f->elements()) {
      // Oracle: count x with theta(x) a = a x.
      std::size_t count = 0;
      for (const auto& x : f->elements()) count += frobenius(x, 1) * a == a * x ? 1 : 0;
      const auto c = centralizer(a);
      std::size_t size = 1;
      for (unsigned i = 0; i < c.degree; ++i) size *= p;
      EXPECT_EQ(size, count);
      EXPECT_EQ(c.degree, a.is_zero() ? n : 1U);
    }
  }
}

TEST(PrimitiveElement, Examples) {
  EXPECT_EQ(primitive_element(make_field(2, 2)), make_field(2, 2)->generator());
  EXPECT_TRUE(primitive_element(make_field(2, 1)).is_one());
  EXPECT_EQ(primitive_element(make_field(5, 1)), make_field(5, 1)->constant(2));
  for (auto [p, n] : kSmallFields) {
    const Field f = make_field(p, n);
    const FqElem g = primitive_element(f);
    EXPECT_EQ(multiplicative_order(g), f->order() - 1);
    for (std::uint64_t i = 1; i < g.index(); ++i) EXPECT_LT(multiplicative_order(f->element(i)), f->order() - 1);
  }
}

TEST(Embedding, IsARingHomomorphism) {
  for (auto [p, n, l] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{{2, 2, 4}, {3, 1, 2}, {3, 2, 4}}) {
    const Field small = make_field(p, n);
    const Field large = make_field(p, l);
    const FieldEmbedding e(small, large);
    std::set<std::uint64_t> image;
    for (const auto& x : small->elements()) {
      image.insert(e(x).index());
      EXPECT_TRUE(e.in_image(e(x)));
      for (const auto& y : small->elements()) {
        EXPECT_EQ(e(x * y), e(x) * e(y));
        EXPECT_EQ(e(x + y), e(x) + e(y));
      }
    }
    EXPECT_EQ(image.size(), small->order());
    std::size_t in = 0;
    for (const auto& y : large->elements()) in += e.in_image(y) ? 1 : 0;
    EXPECT_EQ(in, small->order());
  }
}

TEST(Printing, DescendingPowers) {
  const Field f = make_field(3, 2);
  EXPECT_EQ(to_string(f->zero()), "0");
  EXPECT_EQ(to_string(A(f, "2*a+1")), "2*a+1");
  EXPECT_EQ(to_string(A(f, "a")), "a");
}
