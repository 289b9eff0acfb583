#include "skewfq/plt.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "skewfq/error.hpp"

namespace skewfq {

FqMatrix::FqMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

FqMatrix FqMatrix::identity(const Field& field, std::size_t n) {
  FqMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field->one();
  return m;
}

std::vector<FqElem> FqMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
  check_same_field(*field_, *rhs.field_);
  if (cols_ != rhs.rows_) fail(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  FqMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FqElem& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

FqMatrix FqMatrix::operator+(const FqMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
  FqMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

FqMatrix FqMatrix::operator-(const FqMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
  FqMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

FqMatrix FqMatrix::scale_left(const FqElem& c) const {
  FqMatrix out = *this;
  for (auto& x : out.data_) x = c * x;
  return out;
}

FqMatrix FqMatrix::frobenius(unsigned k) const {
  FqMatrix out = *this;
  for (auto& x : out.data_) x = skewfq::frobenius(x, k);
  return out;
}

bool FqMatrix::operator==(const FqMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  return data_ == rhs.data_;
}

bool FqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const FqElem& x) { return x.is_zero(); });
}

FpVector flatten(const std::vector<FqElem>& v) {
  if (v.empty()) return {};
  const unsigned n = v.front().ctx().degree();
  FpVector out(v.size() * n, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto c = v[i].coords();
    std::copy(c.begin(), c.end(), out.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  return out;
}

std::vector<FqElem> unflatten(const Field& field, std::span<const std::uint32_t> v) {
  const unsigned n = field->degree();
  if (v.size() % n != 0) fail(ErrorKind::ShapeMismatch, "flattened vector length is not a multiple of n");
  std::vector<FqElem> out;
  for (std::size_t i = 0; i < v.size(); i += n) out.push_back(field->from_coords(v.subspan(i, n)));
  return out;
}

LinMap LinMap::from_function(const Field& field, std::size_t rank,
                             const std::function<std::vector<FqElem>(const std::vector<FqElem>&)>& fn) {
  const unsigned n = field->degree();
  const std::size_t dim = rank * n;
  FpMatrix m(dim, dim, field->characteristic());
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<FqElem> v(rank, field->zero());
    Coords e{};
    e[j % n] = 1;
    v[j / n] = FqElem(field, e);
    const auto image = fn(v);
    if (image.size() != rank) fail(ErrorKind::ShapeMismatch, "map changes the module rank");
    m.set_column(j, flatten(image));
  }
  return {field, rank, std::move(m)};
}

LinMap LinMap::identity(const Field& field, std::size_t rank) {
  return {field, rank, FpMatrix::identity(rank * field->degree(), field->characteristic())};
}

LinMap LinMap::scalar(const FqElem& c, std::size_t rank) {
  return from_function(c.field(), rank, [&](const std::vector<FqElem>& v) {
    std::vector<FqElem> out;
    for (const auto& x : v) out.push_back(c * x);
    return out;
  });
}

std::vector<FqElem> LinMap::operator()(const std::vector<FqElem>& v) const {
  if (v.size() != rank) fail(ErrorKind::ShapeMismatch, "vector rank does not match the map");
  return unflatten(field, matrix.apply(flatten(v)));
}

LinMap LinMap::operator*(const LinMap& rhs) const {
  check_same_field(*field, *rhs.field);
  if (rank != rhs.rank) fail(ErrorKind::ShapeMismatch, "composing maps of different rank");
  return {field, rank, matrix * rhs.matrix};
}

LinMap LinMap::operator+(const LinMap& rhs) const {
  check_same_field(*field, *rhs.field);
  if (rank != rhs.rank) fail(ErrorKind::ShapeMismatch, "adding maps of different rank");
  return {field, rank, matrix + rhs.matrix};
}

bool LinMap::operator==(const LinMap& rhs) const {
  return field->same_as(*rhs.field) && rank == rhs.rank && matrix == rhs.matrix;
}

LinMap plt_of_element(const FrobeniusTwist& twist, const FqElem& a) {
  check_same_field(*twist.field, a.ctx());
  return LinMap::from_function(twist.field, 1, [&](const std::vector<FqElem>& v) {
    return std::vector<FqElem>{apply_T(twist, a, v[0])};
  });
}

LinMap plt_of_matrix(const FrobeniusTwist& twist, const FqMatrix& c) {
  if (c.rows() != c.cols()) fail(ErrorKind::ShapeMismatch, "T_C needs a square matrix");
  const std::size_t m = c.rows();
  return LinMap::from_function(twist.field, m, [&](const std::vector<FqElem>& v) {
    std::vector<FqElem> out(m, twist.zero());
    for (std::size_t i = 0; i < m; ++i) {
      const FqElem s = twist.sigma(v[i]);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[j] += s * c(i, j);
    }
    return out;
  });
}

namespace {

void require_monic(const FieldSkew& p) {
  if (!p.is_monic() || p.degree() < 1) fail(ErrorKind::NonMonic, "expected a monic polynomial of degree >= 1");
}

std::vector<FqElem> unit_vector(const Field& field, std::size_t m, std::size_t i) {
  std::vector<FqElem> v(m, field->zero());
  v[i] = field->one();
  return v;
}

bool all_zero(const std::vector<FqElem>& v) {
  return std::all_of(v.begin(), v.end(), [](const FqElem& x) { return x.is_zero(); });
}

FqMatrix matrix_from_entries(const Field& field, std::size_t rows, std::size_t cols, const std::vector<FqElem>& v) {
  FqMatrix b(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = v[r * cols + c];
  }
  return b;
}

std::vector<FqElem> sorted_unique(std::vector<FqElem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Right quotient f' with m = f' g, for a nonzero (possibly non-monic) g.
FieldSkew exact_right_quotient(const FieldSkew& m, const FieldSkew& g) {
  const FrobeniusTwist& tw = g.twist();
  const FqElem c = g.leading();
  auto [q, r] = right_divmod(m, g.scale_left(inverse(c)));
  ensure(r.is_zero(), "expected an exact right division");
  return q * FieldSkew::constant(tw, inverse(c));
}

}  // namespace

Companion companion(const FieldSkew& p) {
  require_monic(p);
  const Field& field = p.twist().field;
  const std::size_t m = static_cast<std::size_t>(p.degree());
  FqMatrix c(field, m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) c(i, i + 1) = field->one();
  for (std::size_t j = 0; j < m; ++j) c(m - 1, j) = -p.coeffs()[j];
  return {p, std::move(c)};
}

LinMap plt_of_companion(const FieldSkew& p) { return plt_of_matrix(p.twist(), companion(p).matrix); }

LinMap poly_matrix(const FieldSkew& f, const LinMap& t) {
  check_same_field(*f.twist().field, *t.field);
  LinMap acc{t.field, t.rank, FpMatrix(t.matrix.rows(), t.matrix.cols(), t.matrix.modulus())};
  LinMap power = LinMap::identity(t.field, t.rank);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) power = t * power;
    if (f.coeffs()[i].is_zero()) continue;
    acc = acc + LinMap::scalar(f.coeffs()[i], t.rank) * power;
  }
  return acc;
}

std::vector<FqElem> apply_poly(const FieldSkew& f, const LinMap& t, const std::vector<FqElem>& v) {
  check_same_field(*f.twist().field, *t.field);
  if (v.size() != t.rank) fail(ErrorKind::ShapeMismatch, "vector rank does not match the map");
  std::vector<FqElem> acc(t.rank, t.field->zero());
  std::vector<FqElem> w = v;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) w = t(w);
    for (std::size_t j = 0; j < t.rank; ++j) acc[j] += f.coeffs()[i] * w[j];
  }
  return acc;
}

FqMatrix matrix_in_basis(const LinMap& t) {
  FqMatrix out(t.field, t.rank, t.rank);
  for (std::size_t i = 0; i < t.rank; ++i) {
    const auto img = t(unit_vector(t.field, t.rank, i));
    for (std::size_t j = 0; j < t.rank; ++j) out(i, j) = img[j];
  }
  return out;
}

FqMatrix evaluate_at_matrix(const FieldSkew& f, const FqMatrix& c) {
  const FrobeniusTwist& tw = f.twist();
  check_same_field(*tw.field, *c.field());
  FqMatrix acc(c.field(), c.rows(), c.cols());
  FqMatrix n = FqMatrix::identity(c.field(), c.rows());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) n = n.frobenius(tw.power) * c;
    acc = acc + n.scale_left(f.coeffs()[i]);
  }
  return acc;
}

KernelReport plt_kernel(const FieldSkew& f, const FqElem& a) {
  const FrobeniusTwist& tw = f.twist();
  const Field& field = tw.field;
  Subspace space = Subspace::kernel(poly_matrix(f, plt_of_element(tw, a)).matrix);
  const unsigned cdeg = centralizer(a, tw.power).degree;
  ensure(space.dim() % cdeg == 0, "kernel dimension is not a multiple of the centralizer degree");
  if (field->order() <= 4096) {
    for (const auto& x : field->elements()) {
      const bool expected = x.is_zero() || evaluate(f, conjugate(a, x, tw.power)).is_zero();
      ensure(space.contains(flatten({x})) == expected, "kernel disagrees with the roots among conjugates");
    }
  }
  const std::size_t dim = space.dim() / cdeg;
  return {std::move(space), cdeg, dim};
}

std::vector<FqElem> remainder_row(const FieldSkew& f, const FieldSkew& p) {
  require_monic(p);
  f.check_compatible(p);
  const std::size_t m = static_cast<std::size_t>(p.degree());
  const Field& field = p.twist().field;
  auto row = apply_poly(f, plt_of_companion(p), unit_vector(field, m, 0));
  const FieldSkew r = right_divmod(f, p).second;
  for (std::size_t i = 0; i < m; ++i) ensure(row[i] == r.coeff(i), "remainder via T_p disagrees with division");
  return row;
}

namespace {

std::vector<FqMatrix> solve_intertwining(const FrobeniusTwist& tw, const FqMatrix& c1, const FqMatrix& c2) {
  const Field& field = tw.field;
  const std::size_t r = c1.rows();
  const std::size_t c = c2.rows();
  // B -> C1 B - sigma(B) C2 on r x c matrices.
  const LinMap eq = LinMap::from_function(field, r * c, [&](const std::vector<FqElem>& v) {
    const FqMatrix b = matrix_from_entries(field, r, c, v);
    return (c1 * b - b.frobenius(tw.power) * c2).entries();
  });
  std::vector<FqMatrix> basis;
  for (const auto& k : kernel_basis(eq.matrix)) basis.push_back(matrix_from_entries(field, r, c, unflatten(field, k)));
  return basis;
}

FqMatrix combine(const std::vector<FqMatrix>& basis, std::span<const std::uint32_t> coeffs) {
  FqMatrix acc(basis.front().field(), basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] != 0) acc = acc + basis[i].scale_left(basis[i].field()->constant(coeffs[i]));
  }
  return acc;
}

}  // namespace

std::vector<FqMatrix> eigenring(const FieldSkew& p) {
  require_monic(p);
  const FrobeniusTwist& tw = p.twist();
  const FqMatrix c = companion(p).matrix;
  auto basis = solve_intertwining(tw, c, c);
  const std::size_t m = c.rows();
  std::vector<FpVector> flat;
  for (const auto& b : basis) flat.push_back(flatten(b.entries()));
  const Subspace span = Subspace::span(tw.field->characteristic(), m * m * tw.field->degree(), flat);
  ensure(span.contains(flatten(FqMatrix::identity(tw.field, m).entries())), "eigenring lacks the identity");
  for (const auto& x : basis) {
    for (const auto& y : basis) ensure(span.contains(flatten((x * y).entries())), "eigenring is not closed");
  }
  return basis;
}

bool is_invertible(const FqMatrix& b) {
  if (b.rows() != b.cols()) return false;
  const std::size_t m = b.rows();
  const LinMap right_mult = LinMap::from_function(b.field(), m, [&](const std::vector<FqElem>& v) {
    std::vector<FqElem> out(m, b.field()->zero());
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) out[j] += v[i] * b(i, j);
    }
    return out;
  });
  return rank(right_mult.matrix) == m * b.field()->degree();
}

Intertwiners intertwiners(const FieldSkew& p1, const FieldSkew& p2, std::uint64_t seed) {
  require_monic(p1);
  require_monic(p2);
  p1.check_compatible(p2);
  const FrobeniusTwist& tw = p1.twist();
  Intertwiners out{solve_intertwining(tw, companion(p1).matrix, companion(p2).matrix), false, true, true, std::nullopt};
  if (p1.degree() != p2.degree() || out.basis.empty()) return out;

  const std::uint32_t p = tw.field->characteristic();
  const std::size_t d = out.basis.size();
  double log2_size = static_cast<double>(d) * std::log2(static_cast<double>(p));
  std::vector<std::uint32_t> coeffs(d, 0);
  if (log2_size <= 16.0) {
    while (true) {
      std::size_t k = 0;
      while (k < d && ++coeffs[k] == p) coeffs[k++] = 0;
      if (k == d) break;
      FqMatrix b = combine(out.basis, coeffs);
      if (is_invertible(b)) {
        out.is_isomorphic = true;
        out.witness = std::move(b);
        break;
      }
    }
    return out;
  }
  out.exhaustive = false;
  out.certain = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
  for (int trial = 0; trial < 64; ++trial) {
    for (auto& c : coeffs) c = digit(rng);
    FqMatrix b = combine(out.basis, coeffs);
    if (is_invertible(b)) {
      out.is_isomorphic = true;
      out.certain = true;
      out.witness = std::move(b);
      break;
    }
  }
  return out;
}

HomSpace hom_space(const FieldSkew& f, const FieldSkew& p) {
  require_monic(p);
  f.check_compatible(p);
  const FrobeniusTwist& tw = p.twist();
  HomSpace out{Subspace::kernel(poly_matrix(f, plt_of_companion(p)).matrix), {}};
  for (const auto& v : out.kernel.basis()) {
    FieldSkew g(tw, unflatten(tw.field, v));
    ensure(right_divmod(f * g, p).second.is_zero(), "hom-space witness g does not satisfy f g in Rp");
    out.witnesses.push_back(std::move(g));
  }
  return out;
}

bool idealizer_test(const FieldSkew& g, const FieldSkew& p) {
  require_monic(p);
  g.check_compatible(p);
  const LinMap tp = plt_of_companion(p);
  const auto v = apply_poly(g, tp, unit_vector(tp.field, tp.rank, 0));
  const bool by_kernel = all_zero(apply_poly(p, tp, v));
  const bool by_division = right_divmod(p * g, p).second.is_zero();
  ensure(by_kernel == by_division, "idealizer criterion disagrees with division");
  return by_kernel;
}

CompanionAnnihilation companion_annihilation(const FieldSkew& p) {
  require_monic(p);
  const bool in_idl = idealizer_test(FieldSkew::variable(p.twist()), p);
  const bool annihilated = evaluate_at_matrix(p, companion(p).matrix).is_zero();
  const bool equivalent = in_idl == annihilated;
  if (p.degree() > 1) ensure(equivalent, "t in Idl(Rp) and p(C(p)) = 0 disagree");
  return {in_idl, annihilated, equivalent};
}

std::vector<FqElem> skew_roots(const FieldSkew& f) {
  std::vector<FqElem> out;
  for (const auto& c : f.twist().field->elements()) {
    if (evaluate(f, c).is_zero()) out.push_back(c);
  }
  return out;
}

GMAudit gm_audit(const FieldSkew& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "the zero polynomial has every element as a root");
  const FrobeniusTwist& tw = f.twist();
  GMAudit out{{}, 0, f.degree(), false, false};
  for (const auto& cls : conjugacy_classes(tw.field, tw.power)) {
    std::size_t roots = 0;
    for (const auto& x : cls.members) roots += evaluate(f, x).is_zero() ? 1 : 0;
    const KernelReport k = plt_kernel(f, cls.representative);
    ensure((roots > 0) == (k.dim_over_centralizer > 0), "kernel is nonzero exactly on classes with roots");
    if (roots == 0) continue;
    out.classes.push_back({cls.representative, cls.members.size(), roots, k.dim_over_centralizer});
    out.sum += k.dim_over_centralizer;
  }
  const auto deg = static_cast<std::size_t>(out.degree);
  out.bound_held = out.classes.size() <= deg && out.sum <= deg;
  out.wedderburn_equality = out.sum == deg;
  return out;
}

KernelSplit kernel_split(const FieldSkew& f, const FieldSkew& g, const FqElem& a) {
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::InvalidArgument, "kernel split needs nonzero polynomials");
  if (!rgcd(f, g).is_one()) fail(ErrorKind::NotCoprime, "Rf + Rg != R");
  const FrobeniusTwist& tw = f.twist();
  const FieldSkew m = llclm(f, g);
  const FieldSkew f_prime = exact_right_quotient(m, g);
  const LinMap t = plt_of_element(tw, a);
  const Subspace kf = Subspace::kernel(poly_matrix(f, t).matrix);
  const Subspace kg = Subspace::kernel(poly_matrix(g, t).matrix);
  const Subspace km = Subspace::kernel(poly_matrix(m, t).matrix);
  const Subspace kfp = Subspace::kernel(poly_matrix(f_prime, t).matrix);
  const bool direct = (kf + kg) == km && kf.intersect(kg).dim() == 0;
  const bool image = kf.image(poly_matrix(g, t).matrix) == kfp;
  return {m, f_prime, kf.dim(), kg.dim(), km.dim(), direct, image};
}

PhiTransform phi_transform(const FieldSkew& g, const FieldSkew& f) {
  f.check_compatible(g);
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::InvalidArgument, "phi transform needs nonzero polynomials");
  const FrobeniusTwist& tw = f.twist();
  PhiTransform out{FieldSkew(tw), skew_roots(f), {}, {}};
  for (const auto& x : out.roots) {
    const FqElem gx = evaluate(g, x);
    if (gx.is_zero()) fail(ErrorKind::NotInvertibleAtRoot, "g vanishes at the root " + to_string(x) + " of f");
    out.images.push_back(conjugate(x, gx, tw.power));
  }
  if (!rgcd(f, g).is_one()) fail(ErrorKind::NotCoprime, "1 -> g does not induce an isomorphism (Rf + Rg != R)");
  out.f_prime = exact_right_quotient(llclm(f, g), g);
  out.images = sorted_unique(std::move(out.images));
  out.target_roots = skew_roots(out.f_prime);
  ensure(out.images == out.target_roots, "phi_g(V(f)) differs from V(f')");
  return out;
}

Hilbert90 hilbert90(const Field& field) {
  const FrobeniusTwist tw{field, 1};
  const std::size_t n = field->degree();
  const FieldSkew poly = FieldSkew::monomial(tw, field->one(), n) - FieldSkew::constant(tw, field->one());
  Hilbert90 out{skew_roots(poly), {}, false};
  for (const auto& x : field->elements()) {
    if (!x.is_zero()) out.delta_one.push_back(frobenius(x, 1) / x);
  }
  out.delta_one = sorted_unique(std::move(out.delta_one));
  out.equal = out.roots == out.delta_one;
  ensure(out.equal, "V(t^n - 1) differs from the conjugacy class of 1");
  return out;
}

template <class Twist>
typename Twist::Elem word_map(const Twist& twist, std::size_t n, std::size_t i, const typename Twist::Elem& a) {
  if (i > n) fail(ErrorKind::InvalidArgument, "word map index exceeds word length");
  using E = typename Twist::Elem;
  std::vector<E> level{a};  // f^0_0(a)
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<E> next(k + 2, twist.zero());
    for (std::size_t j = 0; j <= k + 1; ++j) {
      if (j >= 1) next[j] += twist.sigma(level[j - 1]);
      if (j <= k) next[j] += twist.delta(level[j]);
    }
    level = std::move(next);
  }
  return level[i];
}

template <class Twist>
bool word_map_identity(const Twist& twist, const typename Twist::Elem& b, const typename Twist::Elem& a,
                       const typename Twist::Elem& v, std::size_t n) {
  auto lhs = a * v;
  for (std::size_t k = 0; k < n; ++k) lhs = apply_T(twist, b, lhs);
  auto rhs = twist.zero();
  auto tv = v;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) tv = apply_T(twist, b, tv);
    rhs += word_map(twist, n, i, a) * tv;
  }
  return lhs == rhs;
}

template FqElem word_map<FrobeniusTwist>(const FrobeniusTwist&, std::size_t, std::size_t, const FqElem&);
template TruncElem word_map<DerivationTwist>(const DerivationTwist&, std::size_t, std::size_t, const TruncElem&);
template bool word_map_identity<FrobeniusTwist>(const FrobeniusTwist&, const FqElem&, const FqElem&, const FqElem&,
                                                std::size_t);
template bool word_map_identity<DerivationTwist>(const DerivationTwist&, const TruncElem&, const TruncElem&,
                                                 const TruncElem&, std::size_t);

}  // namespace skewfq
