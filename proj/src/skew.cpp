#include "skewfq/skew.hpp"

#include <algorithm>

#include "skewfq/error.hpp"
#include "skewfq/format.hpp"
#include "skewfq/linalg.hpp"

namespace skewfq {

std::string FrobeniusTwist::describe() const {
  return "field:" + field->describe() + ";sigma=frob^" + std::to_string(power);
}

std::string DerivationTwist::describe() const { return "trunc:" + ring->describe() + ";delta=d/du"; }

namespace {

void check_elem(const FrobeniusTwist& tw, const FqElem& x) { check_same_field(*tw.field, x.ctx()); }
void check_elem(const DerivationTwist& tw, const TruncElem& x) { check_same_ring(*tw.ring, x.ctx()); }

}  // namespace

template <class Twist>
SkewPoly<Twist>::SkewPoly(Twist twist) : twist_(std::move(twist)) {}

template <class Twist>
SkewPoly<Twist>::SkewPoly(Twist twist, std::vector<Elem> coeffs) : twist_(std::move(twist)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) check_elem(twist_, c);
  normalize();
}

template <class Twist>
void SkewPoly<Twist>::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

template <class Twist>
SkewPoly<Twist> SkewPoly<Twist>::constant(const Twist& twist, const Elem& c) {
  return SkewPoly(twist, {c});
}

template <class Twist>
SkewPoly<Twist> SkewPoly<Twist>::monomial(const Twist& twist, const Elem& c, std::size_t exponent) {
  std::vector<Elem> coeffs(exponent + 1, twist.zero());
  coeffs[exponent] = c;
  return SkewPoly(twist, std::move(coeffs));
}

template <class Twist>
SkewPoly<Twist> SkewPoly<Twist>::variable(const Twist& twist) {
  return monomial(twist, twist.one(), 1);
}

template <class Twist>
SkewPoly<Twist> SkewPoly<Twist>::linear(const Twist& twist, const Elem& a) {
  return SkewPoly(twist, {-a, twist.one()});
}

template <class Twist>
typename SkewPoly<Twist>::Elem SkewPoly<Twist>::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : twist_.zero();
}

template <class Twist>
typename SkewPoly<Twist>::Elem SkewPoly<Twist>::leading() const {
  if (coeffs_.empty()) fail(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

template <class Twist>
void SkewPoly<Twist>::check_compatible(const SkewPoly& g) const {
  if (!twist_.same_as(g.twist_)) {
    fail(ErrorKind::TwistMismatch, "skew polynomials over " + twist_.describe() + " and " + g.twist_.describe());
  }
}

template <class Twist>
SkewPoly<Twist> SkewPoly<Twist>::operator+(const SkewPoly& g) const {
  check_compatible(g);
  std::vector<Elem> out(std::max(coeffs_.size(), g.coeffs_.size()), twist_.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + g.coeff(i);
  return SkewPoly(twist_, std::move(out));
}

template <class Twist>
SkewPoly<Twist> SkewPoly<Twist>::operator-(const SkewPoly& g) const {
  check_compatible(g);
  std::vector<Elem> out(std::max(coeffs_.size(), g.coeffs_.size()), twist_.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - g.coeff(i);
  return SkewPoly(twist_, std::move(out));
}

template <class Twist>
SkewPoly<Twist> SkewPoly<Twist>::operator-() const {
  return SkewPoly(twist_) - *this;
}

template <class Twist>
SkewPoly<Twist> SkewPoly<Twist>::times_t() const {
  if (is_zero()) return *this;
  std::vector<Elem> out(coeffs_.size() + 1, twist_.zero());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    out[j + 1] += twist_.sigma(coeffs_[j]);
    if constexpr (!Twist::kIsField) out[j] += twist_.delta(coeffs_[j]);
  }
  return SkewPoly(twist_, std::move(out));
}

template <class Twist>
SkewPoly<Twist> SkewPoly<Twist>::scale_left(const Elem& c) const {
  check_elem(twist_, c);
  std::vector<Elem> out = coeffs_;
  for (auto& x : out) x = c * x;
  return SkewPoly(twist_, std::move(out));
}

template <class Twist>
SkewPoly<Twist> SkewPoly<Twist>::operator*(const SkewPoly& g) const {
  check_compatible(g);
  if (is_zero() || g.is_zero()) return SkewPoly(twist_);
  // sum_i a_i (t^i g)
  std::vector<Elem> acc(coeffs_.size() + g.coeffs_.size() - 1, twist_.zero());
  SkewPoly shifted = g;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) shifted = shifted.times_t();
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < shifted.coeffs_.size(); ++j) acc[j] += coeffs_[i] * shifted.coeffs_[j];
  }
  return SkewPoly(twist_, std::move(acc));
}

template <class Twist>
bool SkewPoly<Twist>::operator==(const SkewPoly& g) const {
  check_compatible(g);
  if (coeffs_.size() != g.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!(coeffs_[i] == g.coeffs_[i])) return false;
  }
  return true;
}

template <class Twist>
typename Twist::Elem apply_T(const Twist& twist, const typename Twist::Elem& a, const typename Twist::Elem& x) {
  return twist.sigma(x) * a + twist.delta(x);
}

template <class Twist>
std::pair<SkewPoly<Twist>, SkewPoly<Twist>> right_divmod(const SkewPoly<Twist>& f, const SkewPoly<Twist>& g) {
  f.check_compatible(g);
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "skew division by zero");
  if (!g.is_monic()) fail(ErrorKind::NonMonicDivisor, "right division requires a monic divisor");
  const Twist& tw = f.twist();
  const std::size_t m = static_cast<std::size_t>(g.degree());
  SkewPoly<Twist> r = f;
  if (r.degree() < g.degree()) return {SkewPoly<Twist>(tw), r};
  std::vector<typename Twist::Elem> q(static_cast<std::size_t>(r.degree()) - m + 1, tw.zero());
  // The leading coefficient of t^k g is 1 for monic g.
  while (r.degree() >= g.degree()) {
    const std::size_t k = static_cast<std::size_t>(r.degree()) - m;
    const auto c = r.leading();
    q[k] = c;
    r = r - SkewPoly<Twist>::monomial(tw, c, k) * g;
  }
  return {SkewPoly<Twist>(tw, std::move(q)), r};
}

template <class Twist>
std::pair<SkewPoly<Twist>, SkewPoly<Twist>> left_divmod(const SkewPoly<Twist>& f, const SkewPoly<Twist>& g) {
  f.check_compatible(g);
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "skew division by zero");
  if (!g.is_monic()) fail(ErrorKind::NonMonicDivisor, "left division requires a monic divisor");
  const Twist& tw = f.twist();
  const std::size_t m = static_cast<std::size_t>(g.degree());
  SkewPoly<Twist> r = f;
  if (r.degree() < g.degree()) return {SkewPoly<Twist>(tw), r};
  std::vector<typename Twist::Elem> q(static_cast<std::size_t>(r.degree()) - m + 1, tw.zero());
  // g c t^k has leading coefficient sigma^m(c).
  while (r.degree() >= g.degree()) {
    const std::size_t k = static_cast<std::size_t>(r.degree()) - m;
    const auto c = tw.sigma_inverse_pow(r.leading(), m);
    q[k] += c;
    r = r - g * SkewPoly<Twist>::monomial(tw, c, k);
  }
  return {SkewPoly<Twist>(tw, std::move(q)), r};
}

template <class Twist>
SkewPoly<Twist> make_monic(const SkewPoly<Twist>& f) {
  if (f.is_zero()) return f;
  const auto lc = f.leading();
  if (!f.twist().is_unit(lc)) {
    fail(ErrorKind::UnsupportedRing, "leading coefficient " + to_string(lc) + " is not a unit");
  }
  return f.scale_left(f.twist().unit_inverse(lc));
}

template <class Twist>
SkewPoly<Twist> rgcd(const SkewPoly<Twist>& f, const SkewPoly<Twist>& g) {
  f.check_compatible(g);
  if (f.is_zero() && g.is_zero()) fail(ErrorKind::InvalidArgument, "rgcd(0, 0) is undefined");
  SkewPoly<Twist> a = f;
  SkewPoly<Twist> b = g;
  while (!b.is_zero()) {
    b = make_monic(b);
    SkewPoly<Twist> r = right_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <class Twist>
SkewPoly<Twist> llclm(const SkewPoly<Twist>& f, const SkewPoly<Twist>& g) {
  f.check_compatible(g);
  if constexpr (!Twist::kIsField) {
    fail(ErrorKind::UnsupportedRing, "least left common multiples are only computed over fields");
  } else {
    if (f.is_zero() || g.is_zero()) fail(ErrorKind::InvalidArgument, "llclm of the zero polynomial");
    const Twist& tw = f.twist();
    using P = SkewPoly<Twist>;
    // Invariant: r_i = s_i f + u_i g.
    P r0 = f, r1 = g;
    P s0 = P::constant(tw, tw.one()), s1(tw);
    P u0(tw), u1 = P::constant(tw, tw.one());
    while (!r1.is_zero()) {
      const auto lc_inv = inverse(r1.leading());
      const P q = right_divmod(r0, r1.scale_left(lc_inv)).first * P::constant(tw, lc_inv);
      P r2 = r0 - q * r1;
      P s2 = s0 - q * s1;
      P u2 = u0 - q * u1;
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
      u0 = std::move(u1);
      u1 = std::move(u2);
    }
    // s1 f + u1 g = 0, so s1 f is a common left multiple; it is the least one.
    P l = make_monic(s1 * f);
    ensure((s1 * f + u1 * g).is_zero(), "extended Euclid lost its invariant");
    ensure(right_divmod(l, make_monic(f)).second.is_zero(), "llclm is not a left multiple of f");
    ensure(right_divmod(l, make_monic(g)).second.is_zero(), "llclm is not a left multiple of g");
    ensure(l.degree() + make_monic(r0).degree() == f.degree() + g.degree(), "llclm degree law failed");
    return l;
  }
}

template <class Twist>
typename Twist::Elem skew_norm(const Twist& twist, const typename Twist::Elem& a, std::size_t i) {
  auto n = twist.one();
  for (std::size_t k = 0; k < i; ++k) n = apply_T(twist, a, n);
  return n;
}

template <class Twist>
typename Twist::Elem evaluate(const SkewPoly<Twist>& f, const typename Twist::Elem& a) {
  const Twist& tw = f.twist();
  check_elem(tw, a);
  const auto by_division = right_divmod(f, SkewPoly<Twist>::linear(tw, a)).second.coeff(0);
  auto by_norms = tw.zero();
  auto n = tw.one();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) n = apply_T(tw, a, n);
    by_norms += f.coeffs()[i] * n;
  }
  ensure(by_division == by_norms, "evaluation by division and by norms disagree");
  return by_division;
}

template <class Twist>
std::vector<NormQuotient<Twist>> norm_quotient_sequence(const Twist& twist, const typename Twist::Elem& a,
                                                        std::size_t k) {
  using P = SkewPoly<Twist>;
  std::vector<NormQuotient<Twist>> out;
  const P t_minus_a = P::linear(twist, a);
  P t_pow = P::constant(twist, twist.one());
  auto norm = twist.one();
  P q(twist);
  for (std::size_t i = 0; i <= k; ++i) {
    if (i > 0) {
      q = q.times_t() + P::constant(twist, twist.sigma(norm));
      norm = apply_T(twist, a, norm);
      t_pow = t_pow.times_t();
    }
    ensure(q * t_minus_a + P::constant(twist, norm) == t_pow, "t^i = q_i (t - a) + N_i(a) failed");
    out.push_back({norm, q});
  }
  return out;
}

template <class Twist>
typename Twist::Elem duo_multiplier(const Twist& twist, const typename Twist::Elem& a,
                                    const typename Twist::Elem& b) {
  check_elem(twist, a);
  check_elem(twist, b);
  if (a.is_zero()) return twist.zero();
  const auto target = twist.sigma(a) * b + twist.delta(a);
  if constexpr (Twist::kIsField) {
    return target * inverse(a);
  } else {
    // c a = target is F_p-linear in the coordinates of c.
    const TruncCtx& ctx = a.ctx();
    const std::size_t m = ctx.length();
    FpMatrix mat(m, m, ctx.characteristic());
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::uint32_t> e(m, 0);
      e[i] = 1;
      mat.set_column(i, (ctx.from_coeffs(e) * a).coeffs());
    }
    const auto sol = solve(mat, target.coeffs());
    if (!sol) fail(ErrorKind::NotDuo, "no c with c*(" + to_string(a) + ") = T_b(a)");
    const auto c = ctx.from_coeffs(*sol);
    ensure(c * a == target, "duo multiplier does not solve its equation");
    return c;
  }
}

namespace {

// Returns p with p * g1 = h * (t - a_k)...(t - a_{start+1}) for some h, where
// the chain is applied to g1 starting at roots[start].
FieldSkew chain_left_factor(const FieldSkew& g, const std::vector<FqElem>& roots, std::size_t start) {
  const FrobeniusTwist& tw = g.twist();
  if (start == roots.size()) return FieldSkew::constant(tw, tw.one());
  const FqElem& a = roots[start];
  const FqElem ga = evaluate(g, a);
  if (ga.is_zero()) {
    const FieldSkew g1 = right_divmod(g, FieldSkew::linear(tw, a)).first;
    return chain_left_factor(g1, roots, start + 1);
  }
  // T_a(g(a)) = c g(a) makes (t - c) g right divisible by t - a.
  const FqElem c = duo_multiplier(tw, ga, a);
  const FieldSkew lifted = FieldSkew::linear(tw, c) * g;
  auto [g1, rem] = right_divmod(lifted, FieldSkew::linear(tw, a));
  ensure(rem.is_zero(), "(t - c) g is not right divisible by t - a");
  return chain_left_factor(g1, roots, start + 1) * FieldSkew::linear(tw, c);
}

}  // namespace

LinearChainResult llclm_linear_chain(const FieldSkew& g, const std::vector<FqElem>& roots) {
  if (!g.is_monic()) fail(ErrorKind::NonMonic, "the chain construction expects a monic g");
  const FrobeniusTwist& tw = g.twist();
  FieldSkew product = FieldSkew::constant(tw, tw.one());
  for (const auto& a : roots) product = FieldSkew::linear(tw, a) * product;
  FieldSkew multiple = chain_left_factor(g, roots, 0) * g;
  ensure(multiple.is_monic(), "chain multiple is not monic");
  ensure(multiple.degree() <= g.degree() + static_cast<int>(roots.size()), "chain multiple degree bound failed");
  ensure(right_divmod(multiple, product).second.is_zero(), "chain multiple is not a left multiple of the product");
  FieldSkew least = llclm(g, product);
  ensure(right_divmod(multiple, least).second.is_zero(), "chain multiple is not a left multiple of the llclm");
  return {std::move(multiple), std::move(least), std::move(product)};
}

FieldSkew min_vanishing_closed_form(const Field& field) {
  const FrobeniusTwist tw{field, 1};
  const std::size_t deg = (field->characteristic() - 1) * field->degree() + 1;
  return FieldSkew::monomial(tw, field->one(), deg) - FieldSkew::variable(tw);
}

MinVanishing min_vanishing(const Field& field) {
  const FrobeniusTwist tw{field, 1};
  FieldSkew g = FieldSkew::linear(tw, field->element(0));
  for (std::uint64_t i = 1; i < field->order(); ++i) g = llclm(g, FieldSkew::linear(tw, field->element(i)));
  const bool closed = g == min_vanishing_closed_form(field);
  bool invariant = g * FieldSkew::variable(tw) == FieldSkew::variable(tw) * g;
  for (const auto& x : field->elements()) {
    invariant = invariant && g * FieldSkew::constant(tw, x) == FieldSkew::constant(tw, frobenius(x, 1)) * g;
  }
  ensure(closed, "LLCM of all t - a differs from t^((p-1)n+1) - t");
  ensure(invariant, "minimal vanishing polynomial is not invariant");
  return {std::move(g), closed, invariant};
}

FrobeniusLaw frobenius_law_check(const DerivationTwist& twist, const TruncElem& a) {
  check_elem(twist, a);
  const std::uint32_t p = twist.ring->characteristic();
  const TruncSkew lin = TruncSkew::linear(twist, a);
  TruncSkew lhs = TruncSkew::constant(twist, twist.one());
  for (std::uint32_t i = 0; i < p; ++i) lhs = lhs * lin;
  const TruncSkew rhs =
      TruncSkew::monomial(twist, twist.one(), p) - TruncSkew::constant(twist, skew_norm(twist, a, p));
  const bool equal = lhs == rhs;
  return {lhs, rhs, equal, derivation_is_leibniz(*twist.ring)};
}

std::string to_string(const FieldSkew& f) { return format_polynomial(f.coeffs(), 't'); }
std::string to_string(const TruncSkew& f) { return format_polynomial(f.coeffs(), 't'); }

#define SKEWFQ_INSTANTIATE(TW)                                                                              \
  template class SkewPoly<TW>;                                                                              \
  template TW::Elem apply_T<TW>(const TW&, const TW::Elem&, const TW::Elem&);                               \
  template std::pair<SkewPoly<TW>, SkewPoly<TW>> right_divmod<TW>(const SkewPoly<TW>&, const SkewPoly<TW>&); \
  template std::pair<SkewPoly<TW>, SkewPoly<TW>> left_divmod<TW>(const SkewPoly<TW>&, const SkewPoly<TW>&);  \
  template SkewPoly<TW> make_monic<TW>(const SkewPoly<TW>&);                                                \
  template SkewPoly<TW> rgcd<TW>(const SkewPoly<TW>&, const SkewPoly<TW>&);                                 \
  template SkewPoly<TW> llclm<TW>(const SkewPoly<TW>&, const SkewPoly<TW>&);                                \
  template TW::Elem evaluate<TW>(const SkewPoly<TW>&, const TW::Elem&);                                     \
  template TW::Elem skew_norm<TW>(const TW&, const TW::Elem&, std::size_t);                                 \
  template std::vector<NormQuotient<TW>> norm_quotient_sequence<TW>(const TW&, const TW::Elem&, std::size_t); \
  template TW::Elem duo_multiplier<TW>(const TW&, const TW::Elem&, const TW::Elem&);

SKEWFQ_INSTANTIATE(FrobeniusTwist)
SKEWFQ_INSTANTIATE(DerivationTwist)

#undef SKEWFQ_INSTANTIATE

}  // namespace skewfq
