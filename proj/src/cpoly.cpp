#include "skewfq/cpoly.hpp"

#include <algorithm>
#include <numeric>

#include "skewfq/error.hpp"
#include "skewfq/format.hpp"
#include "skewfq/linalg.hpp"

namespace skewfq {

CPoly::CPoly(Field field) : field_(std::move(field)) {}

CPoly::CPoly(Field field, std::vector<FqElem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) check_same_field(*field_, c.ctx());
  normalize();
}

void CPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CPoly CPoly::constant(const FqElem& c) { return CPoly(c.field(), {c}); }

CPoly CPoly::monomial(const FqElem& c, std::size_t exponent) {
  std::vector<FqElem> coeffs(exponent + 1, c.ctx().zero());
  coeffs[exponent] = c;
  return CPoly(c.field(), std::move(coeffs));
}

CPoly CPoly::variable(const Field& field) { return monomial(field->one(), 1); }

FqElem CPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }

FqElem CPoly::leading() const {
  if (coeffs_.empty()) fail(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

CPoly CPoly::operator+(const CPoly& g) const {
  check_same_field(*field_, *g.field_);
  std::vector<FqElem> out(std::max(coeffs_.size(), g.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + g.coeff(i);
  return CPoly(field_, std::move(out));
}

CPoly CPoly::operator-(const CPoly& g) const {
  check_same_field(*field_, *g.field_);
  std::vector<FqElem> out(std::max(coeffs_.size(), g.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - g.coeff(i);
  return CPoly(field_, std::move(out));
}

CPoly CPoly::operator-() const { return CPoly(field_) - *this; }

CPoly CPoly::operator*(const CPoly& g) const {
  check_same_field(*field_, *g.field_);
  if (is_zero() || g.is_zero()) return CPoly(field_);
  const FieldCtx& ctx = *field_;
  std::vector<Coords> acc(coeffs_.size() + g.coeffs_.size() - 1, Coords{});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      acc[i + j] = ctx.add(acc[i + j], ctx.mul(coeffs_[i].raw(), g.coeffs_[j].raw()));
    }
  }
  std::vector<FqElem> out;
  out.reserve(acc.size());
  for (const auto& c : acc) out.emplace_back(field_, c);
  return CPoly(field_, std::move(out));
}

CPoly CPoly::operator*(const FqElem& c) const {
  std::vector<FqElem> out = coeffs_;
  for (auto& x : out) x = x * c;
  return CPoly(field_, std::move(out));
}

bool CPoly::operator==(const CPoly& g) const {
  check_same_field(*field_, *g.field_);
  if (coeffs_.size() != g.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].raw() != g.coeffs_[i].raw()) return false;
  }
  return true;
}

FqElem CPoly::operator()(const FqElem& c) const {
  check_same_field(*field_, c.ctx());
  FqElem acc = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * c + coeffs_[i];
  return acc;
}

std::pair<CPoly, CPoly> divmod(const CPoly& f, const CPoly& g) {
  check_same_field(*f.field(), *g.field());
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const FieldCtx& ctx = *f.field();
  std::vector<FqElem> rem = f.coeffs();
  const std::size_t dg = g.coeffs().size() - 1;
  if (rem.size() <= dg) return {CPoly(f.field()), f};
  std::vector<FqElem> quot(rem.size() - dg, ctx.zero());
  const FqElem lead_inv = inverse(g.leading());
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k].is_zero()) continue;
    const FqElem c = rem[k] * lead_inv;
    quot[k - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= c * g.coeffs()[j];
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dg), rem.end());
  return {CPoly(f.field(), std::move(quot)), CPoly(f.field(), std::move(rem))};
}

CPoly monic(const CPoly& f) {
  if (f.is_zero()) return f;
  return f * inverse(f.leading());
}

CPoly gcd(const CPoly& f, const CPoly& g) {
  if (f.is_zero() && g.is_zero()) fail(ErrorKind::InvalidArgument, "gcd(0, 0) is undefined");
  CPoly a = f;
  CPoly b = g;
  while (!b.is_zero()) {
    CPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

CPoly derivative(const CPoly& f) {
  if (f.degree() < 1) return CPoly(f.field());
  std::vector<FqElem> out;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    out.push_back(f.coeffs()[i] * f.field()->constant(static_cast<std::int64_t>(i % f.field()->characteristic())));
  }
  return CPoly(f.field(), std::move(out));
}

CPoly powmod(const CPoly& base, std::uint64_t e, const CPoly& modulus) {
  CPoly result = divmod(CPoly::constant(base.field()->one()), modulus).second;
  CPoly b = divmod(base, modulus).second;
  while (e > 0) {
    if (e & 1U) result = divmod(result * b, modulus).second;
    b = divmod(b * b, modulus).second;
    e >>= 1U;
  }
  return result;
}

bool canonical_less(const CPoly& f, const CPoly& g) {
  if (f.degree() != g.degree()) return f.degree() < g.degree();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto a = f.coeffs()[i].index();
    const auto b = g.coeffs()[i].index();
    if (a != b) return a < b;
  }
  return false;
}

CPoly CFactorization::product() const {
  CPoly acc = CPoly::constant(unit);
  for (const auto& f : factors) {
    for (unsigned k = 0; k < f.multiplicity; ++k) acc = acc * f.factor;
  }
  return acc;
}

namespace {

// Inverse Frobenius on coefficients: g(x)^p = c(x) for c supported on
// multiples of p.
CPoly pth_root(const CPoly& c) {
  const std::uint32_t p = c.field()->characteristic();
  const unsigned n = c.field()->degree();
  std::vector<FqElem> out;
  for (std::size_t i = 0; i < c.coeffs().size(); i += p) out.push_back(frobenius(c.coeffs()[i], n - 1));
  return CPoly(c.field(), std::move(out));
}

CPoly exact_quotient(const CPoly& f, const CPoly& g) {
  auto [q, r] = divmod(f, g);
  ensure(r.is_zero(), "expected exact polynomial division");
  return q;
}

}  // namespace

std::vector<CFactor> squarefree_decomposition(const CPoly& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "square-free decomposition of zero");
  std::vector<CFactor> out;
  const CPoly m = monic(f);
  if (m.degree() < 1) return out;
  CPoly c = gcd(m, derivative(m));
  CPoly w = exact_quotient(m, c);
  unsigned i = 1;
  while (!w.is_one()) {
    CPoly y = gcd(w, c);
    CPoly fac = exact_quotient(w, y);
    if (!fac.is_one()) out.push_back({fac, i});
    w = std::move(y);
    c = exact_quotient(c, w);
    ++i;
  }
  if (!c.is_one()) {
    const unsigned p = f.field()->characteristic();
    for (auto& part : squarefree_decomposition(pth_root(c))) {
      out.push_back({std::move(part.factor), part.multiplicity * p});
    }
  }
  return out;
}

namespace {

// Berlekamp subalgebra {h : h^q = h mod f} as an F_p-basis of polynomials.
std::vector<CPoly> berlekamp_basis(const CPoly& f) {
  const Field& field = f.field();
  const FieldCtx& ctx = *field;
  const unsigned n = ctx.degree();
  const std::size_t d = static_cast<std::size_t>(f.degree());
  const std::size_t dim = d * n;
  const CPoly x = CPoly::variable(field);
  const CPoly xq = powmod(x, ctx.order(), f);

  FpMatrix m(dim, dim, ctx.characteristic());
  CPoly xjq = CPoly::constant(ctx.one());  // x^(jq) mod f
  for (std::size_t j = 0; j < d; ++j) {
    for (unsigned k = 0; k < n; ++k) {
      Coords e{};
      e[k] = 1;
      const FqElem ek(field, e);
      // (e_k x^j)^q - e_k x^j = e_k x^(jq) - e_k x^j, since e_k^q = e_k.
      const CPoly img = xjq * ek - CPoly::monomial(ek, j);
      FpVector col(dim, 0);
      for (std::size_t i = 0; i < img.coeffs().size(); ++i) {
        const auto c = img.coeffs()[i].coords();
        for (unsigned t = 0; t < n; ++t) col[i * n + t] = c[t];
      }
      m.set_column(j * n + k, col);
    }
    xjq = divmod(xjq * xq, f).second;
  }
  std::vector<CPoly> basis;
  for (const auto& v : kernel_basis(m)) {
    std::vector<FqElem> coeffs;
    for (std::size_t j = 0; j < d; ++j) {
      coeffs.push_back(ctx.from_coords(std::span<const std::uint32_t>(v.data() + j * n, n)));
    }
    basis.emplace_back(field, std::move(coeffs));
  }
  return basis;
}

}  // namespace

std::size_t berlekamp_rank(const CPoly& f) {
  if (f.degree() < 1) return 0;
  return berlekamp_basis(monic(f)).size() / f.field()->degree();
}

std::vector<CPoly> berlekamp_split(const CPoly& f) {
  const CPoly m = monic(f);
  if (m.degree() < 1) return {};
  if (m.degree() == 1) return {m};
  const auto basis = berlekamp_basis(m);
  const FieldCtx& ctx = *m.field();
  ensure(basis.size() % ctx.degree() == 0, "Berlekamp subalgebra is not an F_q-space");
  const std::size_t r = basis.size() / ctx.degree();

  std::vector<CPoly> factors{m};
  const auto scalars = ctx.elements();
  for (const auto& v : basis) {
    if (factors.size() == r) break;
    if (v.degree() < 1) continue;
    std::vector<CPoly> next;
    for (const auto& g : factors) {
      if (g.degree() == 1) {
        next.push_back(g);
        continue;
      }
      const CPoly vg = divmod(v, g).second;
      std::vector<CPoly> pieces;
      for (const auto& c : scalars) {
        CPoly h = gcd(g, vg - CPoly::constant(c));
        if (h.degree() >= 1) pieces.push_back(std::move(h));
      }
      next.insert(next.end(), pieces.begin(), pieces.end());
    }
    factors = std::move(next);
  }
  ensure(factors.size() == r, "Berlekamp splitting did not separate all factors");
  std::sort(factors.begin(), factors.end(), canonical_less);
  return factors;
}

CFactorization factorize(const CPoly& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  CFactorization out{f.leading(), {}};
  for (const auto& part : squarefree_decomposition(f)) {
    for (auto& g : berlekamp_split(part.factor)) {
      auto it = std::find_if(out.factors.begin(), out.factors.end(),
                             [&](const CFactor& x) { return x.factor == g; });
      if (it == out.factors.end()) {
        out.factors.push_back({std::move(g), part.multiplicity});
      } else {
        it->multiplicity += part.multiplicity;
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const CFactor& x, const CFactor& y) { return canonical_less(x.factor, y.factor); });
  ensure(out.product() == f, "factorization does not reconstruct its input");
  return out;
}

bool is_irreducible(const CPoly& f) {
  if (f.degree() < 1) return false;
  const auto sqf = squarefree_decomposition(f);
  return sqf.size() == 1 && sqf.front().multiplicity == 1 && berlekamp_rank(f) == 1;
}

std::vector<FqElem> roots(const CPoly& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "the zero polynomial vanishes everywhere");
  std::vector<FqElem> from_factors;
  if (f.degree() >= 1) {
    for (const auto& fac : factorize(f).factors) {
      if (fac.factor.degree() == 1) from_factors.push_back(-fac.factor.coeffs()[0]);
    }
  }
  std::sort(from_factors.begin(), from_factors.end());
  const FieldCtx& ctx = *f.field();
  if (ctx.order() <= (1U << 16)) {
    std::vector<FqElem> exhaustive;
    for (std::uint64_t i = 0; i < ctx.order(); ++i) {
      FqElem c = ctx.element(i);
      if (f(c).is_zero()) exhaustive.push_back(std::move(c));
    }
    ensure(exhaustive == from_factors, "root search disagrees with linear factors");
  }
  return from_factors;
}

std::vector<CPoly> divisors(const CPoly& f, const DivisorQuery& query, const CFactorization* factorization) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "divisors of the zero polynomial");
  CFactorization local{f.leading(), {}};
  if (factorization == nullptr) {
    local = factorize(f);
    factorization = &local;
  }
  const auto& facs = factorization->factors;
  const Field& field = f.field();

  // powers[j][k] = facs[j]^k.
  std::vector<std::vector<CPoly>> powers;
  for (const auto& fac : facs) {
    std::vector<CPoly> pw{CPoly::constant(field->one())};
    for (unsigned k = 0; k < fac.multiplicity; ++k) pw.push_back(pw.back() * fac.factor);
    powers.push_back(std::move(pw));
  }
  // suffix_degree[j]: largest degree reachable using factors j..end.
  std::vector<std::size_t> suffix_degree(facs.size() + 1, 0);
  for (std::size_t j = facs.size(); j-- > 0;) {
    suffix_degree[j] = suffix_degree[j + 1] + facs[j].multiplicity * static_cast<std::size_t>(facs[j].factor.degree());
  }

  std::vector<CPoly> results;
  std::size_t generated = 0;
  bool overflow = false;

  for (std::size_t d = 0; d <= suffix_degree[0] && !overflow; ++d) {
    if (query.degree_filter && !query.degree_filter(d)) continue;
    std::vector<CPoly> level;
    // Depth-first over multiplicity choices summing to degree d.
    auto recurse = [&](auto&& self, std::size_t j, std::size_t remaining, const CPoly& acc) -> void {
      if (overflow) return;
      if (j == facs.size()) {
        if (remaining == 0) {
          if (++generated > query.cap) {
            overflow = true;
            return;
          }
          level.push_back(acc);
        }
        return;
      }
      if (remaining > suffix_degree[j]) return;
      const std::size_t deg = static_cast<std::size_t>(facs[j].factor.degree());
      for (unsigned k = 0; k <= facs[j].multiplicity && k * deg <= remaining; ++k) {
        self(self, j + 1, remaining - k * deg, k == 0 ? acc : acc * powers[j][k]);
      }
    };
    recurse(recurse, 0, d, CPoly::constant(field->one()));
    std::sort(level.begin(), level.end(), canonical_less);
    for (auto& g : level) {
      if (!query.predicate || query.predicate(g)) {
        results.push_back(std::move(g));
        if (query.max_results != 0 && results.size() >= query.max_results) return results;
      }
    }
  }
  if (overflow && query.require_complete && results.empty()) {
    fail(ErrorKind::DegreeOverflow,
         "divisor enumeration exceeded cap of " + std::to_string(query.cap) + " candidates without a match");
  }
  return results;
}

std::uint64_t bracket_index(std::uint32_t p, unsigned i) {
  std::uint64_t acc = 0;
  std::uint64_t pw = 1;
  for (unsigned k = 0; k < i; ++k) {
    acc += pw;
    pw *= p;
  }
  return acc;
}

std::optional<unsigned> bracket_level(std::uint64_t e, std::uint32_t p) {
  // [i] = 1 + p + ... + p^(i-1); peel terms off from the bottom.
  unsigned level = 0;
  std::uint64_t pw = 1;
  std::uint64_t acc = 0;
  while (acc < e) {
    acc += pw;
    pw *= p;
    ++level;
  }
  if (acc == e) return level;
  return std::nullopt;
}

BracketSupport bracket_support(const CPoly& f, std::uint32_t p) {
  BracketSupport out;
  out.is_bracket = true;
  for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
    if (f.coeffs()[e].is_zero()) continue;
    const auto level = bracket_level(e, p);
    if (!level) {
      out.is_bracket = false;
      out.terms.clear();
      return out;
    }
    out.terms.push_back({*level, f.coeffs()[e]});
  }
  return out;
}

bool is_bracket(const CPoly& f, std::uint32_t p) { return bracket_support(f, p).is_bracket; }

std::string to_string(const CPoly& f) { return format_polynomial(f.coeffs(), 'x'); }

}  // namespace skewfq
