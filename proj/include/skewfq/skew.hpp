#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "skewfq/field.hpp"
#include "skewfq/trunc.hpp"

namespace skewfq {

/// F_q[t; theta^power], no derivation.
struct FrobeniusTwist {
  using Elem = FqElem;
  static constexpr bool kIsField = true;

  Field field;
  unsigned power = 1;

  Elem zero() const { return field->zero(); }
  Elem one() const { return field->one(); }
  Elem sigma(const Elem& x) const { return frobenius(x, power); }
  Elem sigma_pow(const Elem& x, std::size_t k) const { return frobenius(x, static_cast<std::uint64_t>(power) * k); }
  Elem sigma_inverse_pow(const Elem& x, std::size_t k) const {
    return frobenius_inverse(x, static_cast<std::uint64_t>(power) * k);
  }
  Elem delta(const Elem&) const { return field->zero(); }
  bool is_unit(const Elem& x) const { return !x.is_zero(); }
  Elem unit_inverse(const Elem& x) const { return inverse(x); }
  /// Frobenius power reduced mod n.
  unsigned effective_power() const { return power % field->degree(); }
  bool same_as(const FrobeniusTwist& o) const {
    return field->same_as(*o.field) && effective_power() == o.effective_power();
  }
  std::string describe() const;
};

/// (F_p[u]/(u^m))[t; id, d/du].
struct DerivationTwist {
  using Elem = TruncElem;
  static constexpr bool kIsField = false;

  TruncRing ring;

  Elem zero() const { return ring->zero(); }
  Elem one() const { return ring->one(); }
  Elem sigma(const Elem& x) const { return x; }
  Elem sigma_pow(const Elem& x, std::size_t) const { return x; }
  Elem sigma_inverse_pow(const Elem& x, std::size_t) const { return x; }
  Elem delta(const Elem& x) const { return derive(x); }
  bool is_unit(const Elem& x) const { return x.is_unit(); }
  Elem unit_inverse(const Elem& x) const { return inverse(x); }
  bool same_as(const DerivationTwist& o) const { return ring->same_as(*o.ring); }
  std::string describe() const;
};

/// Element of A[t; sigma, delta], dense low-to-high with no trailing zeros.
template <class Twist>
class SkewPoly {
 public:
  using Elem = typename Twist::Elem;

  explicit SkewPoly(Twist twist);
  SkewPoly(Twist twist, std::vector<Elem> coeffs);

  static SkewPoly constant(const Twist& twist, const Elem& c);
  static SkewPoly monomial(const Twist& twist, const Elem& c, std::size_t exponent);
  static SkewPoly variable(const Twist& twist);
  /// t - a.
  static SkewPoly linear(const Twist& twist, const Elem& a);

  const Twist& twist() const noexcept { return twist_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }
  Elem coeff(std::size_t i) const;
  Elem leading() const;

  SkewPoly operator+(const SkewPoly& g) const;
  SkewPoly operator-(const SkewPoly& g) const;
  SkewPoly operator-() const;
  SkewPoly operator*(const SkewPoly& g) const;
  /// c * f (left scalar multiplication, coefficient-wise).
  SkewPoly scale_left(const Elem& c) const;
  /// t * f.
  SkewPoly times_t() const;
  bool operator==(const SkewPoly& g) const;

  void check_compatible(const SkewPoly& g) const;

 private:
  void normalize();

  Twist twist_;
  std::vector<Elem> coeffs_;
};

using FieldSkew = SkewPoly<FrobeniusTwist>;
using TruncSkew = SkewPoly<DerivationTwist>;

/// T_a(x) = sigma(x) a + delta(x).
template <class Twist>
typename Twist::Elem apply_T(const Twist& twist, const typename Twist::Elem& a, const typename Twist::Elem& x);

/// f = q g + r with deg r < deg g; g must be monic.
template <class Twist>
std::pair<SkewPoly<Twist>, SkewPoly<Twist>> right_divmod(const SkewPoly<Twist>& f, const SkewPoly<Twist>& g);

/// f = g q + r with deg r < deg g; g must be monic.
template <class Twist>
std::pair<SkewPoly<Twist>, SkewPoly<Twist>> left_divmod(const SkewPoly<Twist>& f, const SkewPoly<Twist>& g);

/// Monic polynomial with unit leading coefficient scaled away on the left.
template <class Twist>
SkewPoly<Twist> make_monic(const SkewPoly<Twist>& f);

/// Monic generator of Rf + Rg. Over the truncated ring this fails with
/// UnsupportedRing as soon as a remainder has a non-unit leading coefficient.
template <class Twist>
SkewPoly<Twist> rgcd(const SkewPoly<Twist>& f, const SkewPoly<Twist>& g);

/// Monic generator of Rf ∩ Rg (extended right Euclid); fields only.
template <class Twist>
SkewPoly<Twist> llclm(const SkewPoly<Twist>& f, const SkewPoly<Twist>& g);

/// f(a), by right division by t - a and by sum a_i N_i(a); the two are
/// required to agree.
template <class Twist>
typename Twist::Elem evaluate(const SkewPoly<Twist>& f, const typename Twist::Elem& a);

/// N_i(a) = T_a^i(1).
template <class Twist>
typename Twist::Elem skew_norm(const Twist& twist, const typename Twist::Elem& a, std::size_t i);

template <class Twist>
struct NormQuotient {
  typename Twist::Elem norm;   // N_i(a)
  SkewPoly<Twist> quotient;    // q_{i,a}, with t^i = q_{i,a} (t - a) + N_i(a)
};

/// Entries i = 0..k, built by q_{i+1} = t q_i + sigma(N_i(a)).
template <class Twist>
std::vector<NormQuotient<Twist>> norm_quotient_sequence(const Twist& twist, const typename Twist::Elem& a,
                                                        std::size_t k);

/// c with sigma(a) b + delta(a) = c a (0 when a = 0). Throws NotDuo when no
/// such c exists.
template <class Twist>
typename Twist::Elem duo_multiplier(const Twist& twist, const typename Twist::Elem& a,
                                    const typename Twist::Elem& b);

struct LinearChainResult {
  FieldSkew chain_multiple;  // common left multiple built by lifting g past each t - a_i
  FieldSkew llclm;           // the monic least left common multiple
  FieldSkew linear_product;  // (t - a_k) ... (t - a_1)
};

/// Least left common multiple of g and (t - a_k)...(t - a_1), with roots
/// listed as a_1, ..., a_k.
LinearChainResult llclm_linear_chain(const FieldSkew& g, const std::vector<FqElem>& roots);

struct MinVanishing {
  FieldSkew polynomial;
  bool matches_closed_form;
  bool invariant;  // G x = theta(x) G for all x, and G t = t G
};

/// LLCM of all t - a, a in F_q, folded in index order; sigma must be theta.
MinVanishing min_vanishing(const Field& field);

/// t^((p-1)n+1) - t.
FieldSkew min_vanishing_closed_form(const Field& field);

struct FrobeniusLaw {
  TruncSkew lhs;  // (t - a)^p
  TruncSkew rhs;  // t^p - T_a^p(1)
  bool equal;
  bool derivation_is_leibniz;  // the law is only promised when this holds
};

FrobeniusLaw frobenius_law_check(const DerivationTwist& twist, const TruncElem& a);

/// Descending powers of t, e.g. `(a+1)*t^2+t+1`.
std::string to_string(const FieldSkew& f);
std::string to_string(const TruncSkew& f);

}  // namespace skewfq
