#include "skewfq/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skewfq/error.hpp"

namespace skewfq {

namespace {

// Dense polynomials over F_p, low-to-high, used only to vet moduli.
using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PrimePoly poly_mod(PrimePoly f, const PrimePoly& g, std::uint32_t p) {
  trim(f);
  const std::uint64_t inv = mod_inverse(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = f.back() * inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - c) * g[i]) % p);
    }
    trim(f);
  }
  return f;
}

PrimePoly poly_mulmod(const PrimePoly& x, const PrimePoly& y, const PrimePoly& m, std::uint32_t p) {
  if (x.empty() || y.empty()) return {};
  PrimePoly prod(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
    }
  }
  return poly_mod(std::move(prod), m, p);
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PrimePoly poly_powmod(PrimePoly base, std::uint64_t e, const PrimePoly& m, std::uint32_t p) {
  PrimePoly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1U;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_over_prime_field(std::span<const std::uint32_t> f, std::uint32_t p) {
  PrimePoly m(f.begin(), f.end());
  trim(m);
  if (m.size() < 2) return false;
  const std::size_t n = m.size() - 1;
  if (n == 1) return true;
  PrimePoly x_pow{0, 1};  // x^(p^i) mod m, starting at i = 0
  for (std::size_t i = 1; i <= n / 2; ++i) {
    x_pow = poly_powmod(x_pow, p, m, p);
    PrimePoly diff = x_pow;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;  // x^(p^i) = x mod m, so m has a factor of degree | i
    if (poly_gcd(m, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned n) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= p;
  std::vector<std::uint32_t> f(n + 1, 0);
  f[n] = 1;
  for (std::uint64_t k = 0; k < count; ++k) {
    // c_0 is the most significant digit so candidates come out in
    // constant-term-first lexicographic order.
    std::uint64_t rest = k;
    for (unsigned i = n; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible_over_prime_field(f, p)) return f;
  }
  fail(ErrorKind::InvariantViolation, "no irreducible polynomial found");
}

Field make_field(std::uint32_t p, unsigned n, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) fail(ErrorKind::InvalidArgument, "characteristic too large");
  if (n < 1 || n > kMaxFieldDegree) {
    fail(ErrorKind::InvalidArgument, "extension degree must lie in [1, " + std::to_string(kMaxFieldDegree) + "]");
  }
  std::vector<std::uint32_t> m;
  if (modulus) {
    m = *modulus;
    for (auto& c : m) c %= p;
    while (!m.empty() && m.back() == 0) m.pop_back();
    if (m.size() != n + 1 || m.back() != 1) {
      fail(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(n));
    }
    if (!is_irreducible_over_prime_field(m, p)) {
      fail(ErrorKind::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    }
  } else {
    m = default_modulus(p, n);
  }
  return Field(new FieldCtx(p, n, std::move(m)));
}

FieldCtx::FieldCtx(std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)), frob_(n, n, p) {
  for (unsigned i = 0; i < n_; ++i) q_ *= p_;
  // x^d mod m for d in [n, 2n-2], built by repeated multiplication by x.
  Coords cur{};
  for (unsigned i = 0; i < n_; ++i) cur[i] = (p_ - modulus_[i]) % p_;  // x^n
  for (unsigned d = n_; d + 1 < 2 * n_; ++d) {
    reduction_.push_back(cur);
    const std::uint64_t top = cur[n_ - 1];
    Coords next{};
    for (unsigned i = n_ - 1; i > 0; --i) next[i] = cur[i - 1];
    for (unsigned i = 0; i < n_; ++i) {
      next[i] = static_cast<std::uint32_t>((next[i] + top * ((p_ - modulus_[i]) % p_)) % p_);
    }
    cur = next;
  }
  // Frobenius: column j holds the coordinates of (x^j)^p.
  Coords xj{};
  xj[0] = 1 % p_;
  Coords x{};
  if (n_ > 1) {
    x[1] = 1;
  } else {
    x[0] = (p_ - modulus_[0]) % p_;
  }
  for (unsigned j = 0; j < n_; ++j) {
    Coords img{};
    img[0] = 1 % p_;
    for (std::uint32_t k = 0; k < p_; ++k) img = mul(img, xj);
    frob_.set_column(j, std::span<const std::uint32_t>(img.data(), n_));
    xj = mul(xj, x);
  }
  frob_powers_.push_back(FpMatrix::identity(n_, p_));
  for (unsigned k = 1; k < n_; ++k) {
    frob_powers_.push_back(frob_ * frob_powers_.back());
    ensure(!(frob_powers_.back() == frob_powers_.front()), "frobenius has order below n");
  }
  ensure(frob_ * frob_powers_.back() == frob_powers_.front(), "frobenius^n must be the identity");
}

Coords FieldCtx::add(const Coords& x, const Coords& y) const {
  Coords out{};
  for (unsigned i = 0; i < n_; ++i) {
    const std::uint32_t s = x[i] + y[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
  return out;
}

Coords FieldCtx::sub(const Coords& x, const Coords& y) const {
  Coords out{};
  for (unsigned i = 0; i < n_; ++i) out[i] = x[i] >= y[i] ? x[i] - y[i] : x[i] + p_ - y[i];
  return out;
}

Coords FieldCtx::neg(const Coords& x) const {
  Coords out{};
  for (unsigned i = 0; i < n_; ++i) out[i] = x[i] == 0 ? 0 : p_ - x[i];
  return out;
}

Coords FieldCtx::mul(const Coords& x, const Coords& y) const {
  std::array<std::uint64_t, 2 * kMaxFieldDegree> prod{};
  for (unsigned i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] += static_cast<std::uint64_t>(x[i]) * y[j];
  }
  for (unsigned d = 2 * n_ - 2; d >= n_ && d > 0; --d) {
    const std::uint64_t c = prod[d] % p_;
    if (c == 0) continue;
    const Coords& red = reduction_[d - n_];
    for (unsigned k = 0; k < n_; ++k) prod[k] += c * red[k];
  }
  Coords out{};
  for (unsigned k = 0; k < n_; ++k) out[k] = static_cast<std::uint32_t>(prod[k] % p_);
  return out;
}

Coords FieldCtx::apply_frobenius(const Coords& x, unsigned k) const {
  const FpMatrix& m = frob_powers_[k % n_];
  Coords out{};
  for (unsigned r = 0; r < n_; ++r) {
    std::uint64_t acc = 0;
    for (unsigned c = 0; c < n_; ++c) acc += static_cast<std::uint64_t>(m(r, c)) * x[c];
    out[r] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

FqElem FieldCtx::zero() const { return FqElem(shared_from_this(), Coords{}); }

FqElem FieldCtx::one() const { return constant(1); }

FqElem FieldCtx::generator() const {
  Coords c{};
  if (n_ > 1) {
    c[1] = 1;
  } else {
    c[0] = (p_ - modulus_[0]) % p_;
  }
  return FqElem(shared_from_this(), c);
}

FqElem FieldCtx::constant(std::int64_t c) const {
  Coords out{};
  const std::int64_t r = c % static_cast<std::int64_t>(p_);
  out[0] = static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  return FqElem(shared_from_this(), out);
}

FqElem FieldCtx::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() > n_) fail(ErrorKind::InvalidArgument, "too many coordinates for field");
  Coords c{};
  for (std::size_t i = 0; i < coords.size(); ++i) c[i] = coords[i] % p_;
  return FqElem(shared_from_this(), c);
}

FqElem FieldCtx::element(std::uint64_t index) const {
  if (index >= q_) fail(ErrorKind::InvalidArgument, "element index out of range");
  Coords c{};
  for (unsigned i = 0; i < n_; ++i) {
    c[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return FqElem(shared_from_this(), c);
}

std::vector<FqElem> FieldCtx::elements() const {
  std::vector<FqElem> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(element(i));
  return out;
}

bool FieldCtx::same_as(const FieldCtx& other) const noexcept {
  return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "p=" << p_ << ",n=" << n_ << ",mod=" << modulus_string(*this);
  return os.str();
}

void check_same_field(const FieldCtx& x, const FieldCtx& y) {
  if (!x.same_as(y)) fail(ErrorKind::FieldMismatch, "elements belong to different fields");
}

std::uint64_t FqElem::index() const noexcept {
  std::uint64_t idx = 0;
  const auto p = field_->characteristic();
  for (unsigned i = field_->degree(); i-- > 0;) idx = idx * p + coords_[i];
  return idx;
}

bool FqElem::is_zero() const noexcept {
  for (unsigned i = 0; i < field_->degree(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

bool FqElem::is_one() const noexcept {
  if (coords_[0] != 1) return false;
  for (unsigned i = 1; i < field_->degree(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

std::size_t FqElem::term_count() const noexcept {
  std::size_t k = 0;
  for (unsigned i = 0; i < field_->degree(); ++i) k += coords_[i] != 0;
  return k;
}

FqElem FqElem::operator+(const FqElem& y) const {
  check_same_field(*field_, *y.field_);
  return FqElem(field_, field_->add(coords_, y.coords_));
}

FqElem FqElem::operator-(const FqElem& y) const {
  check_same_field(*field_, *y.field_);
  return FqElem(field_, field_->sub(coords_, y.coords_));
}

FqElem FqElem::operator-() const { return FqElem(field_, field_->neg(coords_)); }

FqElem FqElem::operator*(const FqElem& y) const {
  check_same_field(*field_, *y.field_);
  return FqElem(field_, field_->mul(coords_, y.coords_));
}

FqElem FqElem::operator/(const FqElem& y) const { return *this * inverse(y); }

bool FqElem::operator==(const FqElem& y) const {
  check_same_field(*field_, *y.field_);
  return coords_ == y.coords_;
}

std::strong_ordering FqElem::operator<=>(const FqElem& y) const {
  check_same_field(*field_, *y.field_);
  return index() <=> y.index();
}

FqElem pow(const FqElem& x, std::uint64_t e) {
  FqElem result = x.ctx().one();
  FqElem base = x;
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

FqElem inverse(const FqElem& x) {
  if (x.is_zero()) fail(ErrorKind::NotInvertible, "zero has no inverse");
  return pow(x, x.ctx().order() - 2);
}

FqElem frobenius(const FqElem& x, std::uint64_t k) {
  const unsigned n = x.ctx().degree();
  return FqElem(x.field(), x.ctx().apply_frobenius(x.raw(), static_cast<unsigned>(k % n)));
}

FqElem frobenius_inverse(const FqElem& x, std::uint64_t k) {
  const unsigned n = x.ctx().degree();
  return frobenius(x, (n - k % n) % n);
}

FqElem norm(const FqElem& a, std::uint64_t i, unsigned frob_power) {
  // N_{j+1}(a) = s^j(a) N_j(a).
  FqElem acc = a.ctx().one();
  for (std::uint64_t j = 0; j < i; ++j) acc = frobenius(a, j * frob_power) * acc;
  return acc;
}

FqElem conjugate(const FqElem& a, const FqElem& x, unsigned frob_power) {
  if (x.is_zero()) fail(ErrorKind::NotInvertible, "conjugation by zero");
  return frobenius(x, frob_power) * a * inverse(x);
}

std::vector<ConjClassReport> conjugacy_classes(const Field& field, unsigned frob_power) {
  const std::uint64_t q = field->order();
  std::vector<bool> seen(q, false);
  std::vector<FqElem> units;
  for (std::uint64_t i = 1; i < q; ++i) units.push_back(field->element(i));

  std::vector<ConjClassReport> classes;
  for (std::uint64_t i = 0; i < q; ++i) {
    if (seen[i]) continue;
    const FqElem rep = field->element(i);
    std::vector<bool> in_class(q, false);
    for (const auto& x : units) in_class[conjugate(rep, x, frob_power).index()] = true;
    std::vector<FqElem> members;
    for (std::uint64_t j = 0; j < q; ++j) {
      if (!in_class[j]) continue;
      ensure(!seen[j], "conjugacy classes overlap");
      seen[j] = true;
      members.push_back(field->element(j));
    }
    classes.push_back({rep, std::move(members), centralizer(rep, frob_power).degree});
  }
  return classes;
}

Centralizer centralizer(const FqElem& a, unsigned frob_power) {
  const FieldCtx& ctx = a.ctx();
  const unsigned n = ctx.degree();
  FpMatrix m(n, n, ctx.characteristic());
  for (unsigned j = 0; j < n; ++j) {
    Coords e{};
    e[j] = 1;
    const FqElem x(a.field(), e);
    const FqElem img = frobenius(x, frob_power) * a - a * x;
    m.set_column(j, img.coords());
  }
  Centralizer out{0, {}};
  for (const auto& v : kernel_basis(m)) out.basis.push_back(ctx.from_coords(v));
  out.degree = static_cast<unsigned>(out.basis.size());
  return out;
}

std::uint64_t multiplicative_order(const FqElem& x) {
  if (x.is_zero()) fail(ErrorKind::NotInvertible, "zero has no multiplicative order");
  std::uint64_t order = x.ctx().order() - 1;
  for (auto r : prime_factors(order)) {
    while (order % r == 0 && pow(x, order / r).is_one()) order /= r;
  }
  return order;
}

FqElem primitive_element(const Field& field) {
  const std::uint64_t q = field->order();
  for (std::uint64_t i = 1; i < q; ++i) {
    FqElem x = field->element(i);
    if (multiplicative_order(x) == q - 1) return x;
  }
  fail(ErrorKind::InvariantViolation, "multiplicative group is not cyclic");
}

FieldEmbedding::FieldEmbedding(Field small, Field large)
    : small_(std::move(small)), large_(std::move(large)), image_(large_->zero()) {
  if (small_->characteristic() != large_->characteristic() || large_->degree() % small_->degree() != 0) {
    fail(ErrorKind::NotASubfield, "F_{p^" + std::to_string(small_->degree()) + "} is not a subfield of F_{p^" +
                                      std::to_string(large_->degree()) + "}");
  }
  const auto& m = small_->modulus();
  const std::uint64_t q = large_->order();
  bool found = false;
  for (std::uint64_t i = 0; i < q && !found; ++i) {
    const FqElem r = large_->element(i);
    FqElem acc = large_->zero();
    for (std::size_t k = m.size(); k-- > 0;) acc = acc * r + large_->constant(m[k]);
    if (acc.is_zero()) {
      image_ = r;
      found = true;
    }
  }
  ensure(found, "small modulus has no root in the large field");
  image_mask_.assign(q, false);
  for (std::uint64_t i = 0; i < small_->order(); ++i) image_mask_[(*this)(small_->element(i)).index()] = true;
}

FqElem FieldEmbedding::operator()(const FqElem& x) const {
  check_same_field(x.ctx(), *small_);
  FqElem acc = large_->zero();
  const auto c = x.coords();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * image_ + large_->constant(c[k]);
  return acc;
}

bool FieldEmbedding::in_image(const FqElem& y) const {
  check_same_field(y.ctx(), *large_);
  return image_mask_[y.index()];
}

namespace {

std::string power_basis_string(std::span<const std::uint32_t> c, char var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << c[i] << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string to_string(const FqElem& x) { return power_basis_string(x.coords(), 'a'); }

std::string modulus_string(const FieldCtx& ctx) { return power_basis_string(ctx.modulus(), 'x'); }

}  // namespace skewfq
