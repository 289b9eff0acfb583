#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "skewfq/cpoly.hpp"
#include "skewfq/field.hpp"
#include "skewfq/skew.hpp"
#include "skewfq/trunc.hpp"

namespace skewfq {

/// A parsed ring description, either
///   field:p=2,n=2[,mod=x^2+x+1][;sigma=frob^k]    (or bare p=2,n=2)
///   trunc:p=3,m=3[;delta=d/du]                     (or bare p=3,m=3)
struct RingSpec {
  enum class Kind { Field, Trunc };

  Kind kind = Kind::Field;
  Field field;
  unsigned frob_power = 1;
  TruncRing trunc;

  FrobeniusTwist field_twist() const;
  DerivationTwist trunc_twist() const;
  /// Canonical spelling, e.g. `field:p=2,n=2,mod=x^2+x+1;sigma=frob^1`.
  std::string canonical() const;
};

RingSpec parse_ring_spec(std::string_view src);

/// Grammar shared by every parser below:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := primary ['^' integer]
///   primary:= integer | symbol | '(' expr ')'
/// Integers are reduced mod p. Products follow the ring's own multiplication,
/// so over a skew ring `t*a` means t·a = sigma(a) t.
FqElem parse_field_elem(std::string_view src, const Field& field);
TruncElem parse_trunc_elem(std::string_view src, const TruncRing& ring);
/// Polynomial in x with coefficients in `a`.
CPoly parse_cpoly(std::string_view src, const Field& field);
/// Skew polynomial in t with coefficients in `a`.
FieldSkew parse_field_skew(std::string_view src, const FrobeniusTwist& twist);
/// Skew polynomial in t with coefficients in `u`.
TruncSkew parse_trunc_skew(std::string_view src, const DerivationTwist& twist);

}  // namespace skewfq
