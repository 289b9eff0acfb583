#include "skewfq/factor.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "skewfq/error.hpp"
#include "skewfq/plt.hpp"

namespace skewfq {

namespace {

void require_theta(const FrobeniusTwist& tw) {
  if (tw.effective_power() != 1 % tw.field->degree()) {
    fail(ErrorKind::UnsupportedTwist, "the bracket correspondence needs sigma = theta, got " + tw.describe());
  }
}

void require_monic_nonconstant(const FieldSkew& f) {
  if (!f.is_monic() || f.degree() < 1) fail(ErrorKind::NonMonic, "expected a monic polynomial of degree >= 1");
}

// Right factors of f whose brackets divide f^[] with level in [lo, hi];
// `bracket_factors` is the factorization of f^[].
std::vector<FieldSkew> bracket_right_factors(const FieldSkew& f, const CFactorization& bracket_factors,
                                             std::size_t lo, std::size_t hi, std::size_t cap,
                                             std::size_t max_results) {
  const std::uint32_t p = f.twist().field->characteristic();
  std::vector<FieldSkew> found;
  DivisorQuery query;
  query.cap = cap;
  query.max_results = max_results;
  query.require_complete = true;
  query.degree_filter = [&](std::size_t d) {
    const auto level = bracket_level(d, p);
    return level && *level >= lo && *level <= hi;
  };
  query.predicate = [&](const CPoly& h) {
    if (!is_bracket(h, p)) return false;
    FieldSkew candidate = unbracket_map(h);
    ensure(right_divmod(f, candidate).second.is_zero(), "a bracket divisor failed to right-divide");
    found.push_back(std::move(candidate));
    return true;
  };
  divisors(bracket_map(f), query, &bracket_factors);
  return found;
}

}  // namespace

CPoly bracket_map(const FieldSkew& f) {
  const FrobeniusTwist& tw = f.twist();
  require_theta(tw);
  const Field& field = tw.field;
  if (f.is_zero()) return CPoly(field);
  const std::uint32_t p = field->characteristic();
  std::vector<FqElem> coeffs(bracket_index(p, static_cast<unsigned>(f.degree())) + 1, field->zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) coeffs[bracket_index(p, static_cast<unsigned>(i))] = f.coeffs()[i];
  return CPoly(field, std::move(coeffs));
}

FieldSkew unbracket_map(const CPoly& g) {
  const Field& field = g.field();
  const FrobeniusTwist tw{field, 1};
  const auto support = bracket_support(g, field->characteristic());
  if (!support.is_bracket) fail(ErrorKind::NotBracketPoly, to_string(g) + " is not supported on bracket exponents");
  if (support.terms.empty()) return FieldSkew(tw);
  std::vector<FqElem> coeffs(support.terms.back().level + 1, field->zero());
  for (const auto& term : support.terms) coeffs[term.level] = term.coeff;
  return FieldSkew(tw, std::move(coeffs));
}

bool divides_via_bracket(const FieldSkew& f, const FieldSkew& h) {
  f.check_compatible(h);
  require_theta(f.twist());
  if (h.is_zero()) fail(ErrorKind::DivisionByZero, "divisibility by the zero polynomial");
  const bool skew = right_divmod(f, make_monic(h)).second.is_zero();
  const bool commutative = divmod(bracket_map(f), bracket_map(h)).second.is_zero();
  ensure(skew == commutative, "skew divisibility and bracket divisibility disagree");
  return skew;
}

std::vector<FieldSkew> linear_right_factors(const FieldSkew& f) {
  const FrobeniusTwist& tw = f.twist();
  require_theta(tw);
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "every t - c right-divides the zero polynomial");
  const auto via_bracket = roots(bracket_map(f));
  ensure(via_bracket == skew_roots(f), "roots of f^[] differ from the roots of f");
  std::vector<FieldSkew> out;
  for (const auto& c : via_bracket) out.push_back(FieldSkew::linear(tw, c));
  return out;
}

std::optional<FieldSkew> right_factor_search(const FieldSkew& f, const SearchOptions& options) {
  require_theta(f.twist());
  require_monic_nonconstant(f);
  const std::size_t deg = static_cast<std::size_t>(f.degree());
  const std::size_t hi = options.max_degree == 0 ? deg - 1 : std::min(options.max_degree, deg);
  if (hi < options.min_degree) return std::nullopt;
  const CFactorization bf = factorize(bracket_map(f));
  auto found = bracket_right_factors(f, bf, options.min_degree, hi, options.cap, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

IrreducibilityResult is_irreducible(const FieldSkew& f, std::size_t cap) {
  require_theta(f.twist());
  if (f.degree() < 1) fail(ErrorKind::InvalidArgument, "irreducibility is defined for degree >= 1");
  const FieldSkew m = make_monic(f);
  IrreducibilityCertificate cert{bracket_map(m), factorize(bracket_map(m)), std::nullopt};
  if (m.degree() > 1) {
    auto found = bracket_right_factors(m, cert.bracket_factors, 1, static_cast<std::size_t>(m.degree()) - 1, cap, 1);
    if (!found.empty()) cert.right_factor = std::move(found.front());
  }
  const bool irreducible = !cert.right_factor.has_value();
  return {irreducible, std::move(cert)};
}

FieldSkew SkewFactorization::product() const {
  const FrobeniusTwist tw{unit.field(), 1};
  FieldSkew acc = FieldSkew::constant(tw, unit);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

namespace {

// Complete factorization of a monic polynomial, product order.
std::vector<FieldSkew> peel_all(FieldSkew g, std::size_t cap) {
  std::vector<FieldSkew> rev;
  while (g.degree() >= 1) {
    auto h = right_factor_search(g, {1, 0, cap});
    if (!h) {
      rev.push_back(g);
      break;
    }
    g = right_divmod(g, *h).first;
    rev.push_back(std::move(*h));
  }
  return {rev.rbegin(), rev.rend()};
}

SkewFactorization certified(const FieldSkew& f, std::vector<FieldSkew> factors, std::size_t cap) {
  SkewFactorization out{f.leading(), std::move(factors), {}};
  for (const auto& h : out.factors) {
    auto r = is_irreducible(h, cap);
    ensure(r.irreducible, "a reported factor is reducible");
    out.certificates.push_back(std::move(r.certificate));
  }
  ensure(out.product() == f, "factorization does not reconstruct its input");
  return out;
}

}  // namespace

SkewFactorization factorize(const FieldSkew& f, std::size_t cap) {
  require_theta(f.twist());
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  return certified(f, peel_all(make_monic(f), cap), cap);
}

std::vector<FieldSkew> irreducible_right_factors(const FieldSkew& f, std::size_t cap) {
  require_theta(f.twist());
  require_monic_nonconstant(f);
  const CFactorization bf = factorize(bracket_map(f));
  auto candidates = bracket_right_factors(f, bf, 1, static_cast<std::size_t>(f.degree()), cap, 0);
  std::vector<FieldSkew> out;
  for (auto& h : candidates) {
    if (is_irreducible(h, cap).irreducible) out.push_back(std::move(h));
  }
  return out;
}

std::vector<SkewFactorization> alternate_factorizations(const FieldSkew& f, std::size_t k, std::size_t cap) {
  require_theta(f.twist());
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  std::vector<SkewFactorization> out;
  if (k == 0) return out;
  struct Node {
    std::vector<FieldSkew> peeled;  // rightmost factor first
    FieldSkew rest;
  };
  std::vector<std::vector<FieldSkew>> seen;
  std::deque<Node> queue{{{}, make_monic(f)}};
  while (!queue.empty() && out.size() < k) {
    Node node = std::move(queue.front());
    queue.pop_front();
    std::vector<FieldSkew> full = peel_all(node.rest, cap);
    full.insert(full.end(), node.peeled.rbegin(), node.peeled.rend());
    if (std::find(seen.begin(), seen.end(), full) == seen.end()) {
      seen.push_back(full);
      out.push_back(certified(f, std::move(full), cap));
    }
    if (node.rest.degree() < 1) continue;
    for (auto& h : irreducible_right_factors(node.rest, cap)) {
      Node child{node.peeled, right_divmod(node.rest, h).first};
      child.peeled.push_back(std::move(h));
      queue.push_back(std::move(child));
    }
  }
  return out;
}

std::uint64_t splitting_field_degree(const FieldSkew& f) {
  require_theta(f.twist());
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "the zero polynomial has no splitting field");
  const CPoly bf = bracket_map(f);
  std::uint64_t acc = 1;
  if (bf.degree() < 1) return acc;
  for (const auto& fac : factorize(bf).factors) acc = std::lcm(acc, static_cast<std::uint64_t>(fac.factor.degree()));
  return acc;
}

ExtensionRootReport extension_root_check(const Field& small, const Field& large) {
  const FieldEmbedding embed(small, large);
  const std::uint32_t p = small->characteristic();
  const unsigned n = small->degree();
  const unsigned l = large->degree();
  const FrobeniusTwist tw{large, 1};
  const std::size_t deg = static_cast<std::size_t>(p - 1) * n + 1;
  const FieldSkew g = FieldSkew::monomial(tw, large->one(), deg) - FieldSkew::variable(tw);

  auto delta_one = [](const Field& field) {
    std::vector<FqElem> out;
    for (const auto& x : field->elements()) {
      if (!x.is_zero()) out.push_back(frobenius(x, 1) / x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  ExtensionRootReport r{p, n, l, l == n, (static_cast<std::uint64_t>(p - 1) * n) % l == 0, 0, 0, true, 0, 0};
  const auto dl = delta_one(large);
  r.delta_l_size = dl.size();
  r.delta_n_size = delta_one(small).size();
  for (const auto& c : large->elements()) {
    if (!evaluate(g, c).is_zero()) continue;
    ++r.root_count;
    if (!embed.in_image(c)) ++r.roots_outside_small;
  }
  for (const auto& c : dl) r.annihilates_delta_l = r.annihilates_delta_l && evaluate(g, c).is_zero();
  if (r.premise_holds) ensure(r.annihilates_delta_l, "G fails to annihilate Delta_l(1) although l | (p-1)n");
  return r;
}

}  // namespace skewfq
