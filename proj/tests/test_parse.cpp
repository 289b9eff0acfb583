#include <gtest/gtest.h>

#include "skewfq/error.hpp"
#include "skewfq/parse.hpp"

using namespace skewfq;

namespace {

ParseError parse_failure(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError";
  return ParseError(0, {}, "");
}

}  // namespace

TEST(RingSpec, FieldForms) {
  const auto bare = parse_ring_spec("p=2,n=2");
  EXPECT_EQ(bare.kind, RingSpec::Kind::Field);
  EXPECT_EQ(bare.canonical(), "field:p=2,n=2,mod=x^2+x+1;sigma=frob^1");
  const auto full = parse_ring_spec("field:p=2,n=3,mod=x^3+x^2+1;sigma=frob^2");
  EXPECT_EQ(full.frob_power, 2U);
  EXPECT_EQ(full.field->modulus(), (std::vector<std::uint32_t>{1, 0, 1, 1}));
  EXPECT_EQ(parse_ring_spec(full.canonical()).canonical(), full.canonical());
}

TEST(RingSpec, TruncForms) {
  const auto spec = parse_ring_spec("trunc:p=3,m=3;delta=d/du");
  EXPECT_EQ(spec.kind, RingSpec::Kind::Trunc);
  EXPECT_EQ(spec.trunc->order(), 27U);
  EXPECT_EQ(parse_ring_spec("p=3,m=3").canonical(), spec.canonical());
}

TEST(RingSpec, Errors) {
  EXPECT_EQ(parse_failure([] { parse_ring_spec("field:p=2,q=2"); }).offset(), 10U);
  try {
    parse_ring_spec("p=4,n=1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
  try {
    parse_ring_spec("p=2,n=2,mod=x^2+1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ReducibleModulus);
  }
  EXPECT_THROW(parse_ring_spec("field:p=2,n=2;delta=d/du"), Error);
  EXPECT_THROW(parse_ring_spec(""), ParseError);
}

TEST(Expressions, Examples) {
  const auto tw = parse_ring_spec("field:p=2,n=2").field_twist();
  const auto f = parse_field_skew("t^3+a", tw);
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.coeff(0), tw.field->generator());
  EXPECT_TRUE(parse_field_skew("0", tw).is_zero());
  const auto c = parse_field_skew("t^5+a*t^4+(1+a)*t^3+a*t^2+t+1", tw);
  EXPECT_EQ(to_string(c), "t^5+a*t^4+(a+1)*t^3+a*t^2+t+1");
}

TEST(Expressions, SkewProductsFollowTheCommutationRule) {
  const auto tw = parse_ring_spec("field:p=2,n=2").field_twist();
  EXPECT_EQ(parse_field_skew("t*a", tw), parse_field_skew("(a+1)*t", tw));
  EXPECT_EQ(parse_field_skew("(t^2+a*t+1)*(t+a)", tw), parse_field_skew("t^3+a", tw));
  EXPECT_EQ(parse_field_skew("(t+a)^2", tw), parse_field_skew("(t+a)*(t+a)", tw));
  const auto dt = parse_ring_spec("trunc:p=3,m=3").trunc_twist();
  EXPECT_EQ(parse_trunc_skew("t*u", dt), parse_trunc_skew("u*t+1", dt));
}

TEST(Expressions, ImplicitMultiplicationAndSigns) {
  const auto f = make_field(3, 2);
  EXPECT_EQ(parse_cpoly("2x^2 - x + a", f), parse_cpoly("2*x^2+2*x+a", f));
  EXPECT_EQ(parse_cpoly("-1", f), parse_cpoly("2", f));
  EXPECT_EQ(parse_field_elem("a^8", f), f->one());
  EXPECT_EQ(parse_field_elem("10", f), f->one());
}

TEST(Expressions, ErrorsCarryOffsets) {
  const auto tw = parse_ring_spec("field:p=2,n=2").field_twist();
  const auto e1 = parse_failure([&] { parse_field_skew("t^3+", tw); });
  EXPECT_EQ(e1.offset(), 4U);
  EXPECT_FALSE(e1.expected().empty());
  EXPECT_EQ(parse_failure([&] { parse_field_skew("t^3+u", tw); }).offset(), 4U);
  EXPECT_EQ(parse_failure([&] { parse_field_skew("(t+1", tw); }).offset(), 4U);
  EXPECT_EQ(parse_failure([&] { parse_field_skew("t^", tw); }).offset(), 2U);
  EXPECT_THROW(parse_cpoly("t+1", tw.field), ParseError);
  EXPECT_THROW(parse_field_elem("x", tw.field), ParseError);
}
