#include "skewfq/linalg.hpp"

#include <algorithm>

#include "skewfq/error.hpp"

namespace skewfq {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inverse(std::uint32_t x, std::uint32_t p) {
  if (x % p == 0) fail(ErrorKind::NotInvertible, "zero has no inverse mod p");
  return mod_pow(x, p - 2, p);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

void FpMatrix::set_column(std::size_t c, std::span<const std::uint32_t> v) {
  if (v.size() != rows_) fail(ErrorKind::ShapeMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

FpVector FpMatrix::column(std::size_t c) const {
  FpVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

FpVector FpMatrix::row(std::size_t r) const {
  return FpVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

FpVector FpMatrix::apply(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) fail(ErrorKind::ShapeMismatch, "vector length does not match matrix");
  FpVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const std::uint32_t* row = &data_[r * cols_];
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += static_cast<std::uint64_t>(row[c]) * v[c];
      if ((c & 15U) == 15U) acc %= p_;
    }
    out[r] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) fail(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  FpMatrix out(rows_, rhs.cols_, p_);
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) acc[c] = (acc[c] + a * rhs(k, c)) % p_;
    }
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) = static_cast<std::uint32_t>(acc[c]);
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_) {
    fail(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
  }
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + rhs.data_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_) {
    fail(ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
  }
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + p_ - rhs.data_[i]) % p_;
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<std::size_t> row_reduce(FpMatrix& m) {
  const std::uint32_t p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const std::uint64_t inv = mod_inverse(m(row, col), p);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = static_cast<std::uint32_t>(m(row, c) * inv % p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const std::uint64_t factor = p - m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = static_cast<std::uint32_t>((m(r, c) + factor * m(row, c)) % p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(FpMatrix m) { return row_reduce(m).size(); }

std::vector<FpVector> kernel_basis(const FpMatrix& m) {
  FpMatrix reduced = m;
  const auto pivots = row_reduce(reduced);
  const std::uint32_t p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(m.cols(), 0);
    v[free] = 1 % p;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = (p - reduced(i, free)) % p;
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(p, m.cols(), basis).basis();
}

std::optional<FpVector> solve(const FpMatrix& m, std::span<const std::uint32_t> b) {
  if (b.size() != m.rows()) fail(ErrorKind::ShapeMismatch, "right-hand side length mismatch");
  FpMatrix aug(m.rows(), m.cols() + 1, m.modulus());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r] % m.modulus();
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  FpVector x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

Subspace::Subspace(std::uint32_t p, std::size_t ambient_dim) : p_(p), ambient_(ambient_dim) {}

Subspace Subspace::span(std::uint32_t p, std::size_t ambient_dim, const std::vector<FpVector>& vectors) {
  Subspace s(p, ambient_dim);
  if (vectors.empty()) return s;
  FpMatrix m(vectors.size(), ambient_dim, p);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim) fail(ErrorKind::ShapeMismatch, "vector length mismatch in span");
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = vectors[r][c] % p;
  }
  const auto pivots = row_reduce(m);
  for (std::size_t r = 0; r < pivots.size(); ++r) s.basis_.push_back(m.row(r));
  return s;
}

Subspace Subspace::kernel(const FpMatrix& m) {
  Subspace s(m.modulus(), m.cols());
  s.basis_ = kernel_basis(m);
  return s;
}

bool Subspace::contains(std::span<const std::uint32_t> v) const {
  if (v.size() != ambient_) fail(ErrorKind::ShapeMismatch, "vector length mismatch");
  // Reduce v against the echelon basis; v is inside iff it reduces to zero.
  FpVector w(v.begin(), v.end());
  for (const auto& b : basis_) {
    std::size_t lead = 0;
    while (b[lead] == 0) ++lead;
    const std::uint64_t coef = w[lead];
    if (coef == 0) continue;
    for (std::size_t c = lead; c < ambient_; ++c) {
      w[c] = static_cast<std::uint32_t>((w[c] + (p_ - coef) * b[c]) % p_);
    }
  }
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const FpVector& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.p_ != p_ || other.ambient_ != ambient_) fail(ErrorKind::ShapeMismatch, "subspace sum mismatch");
  std::vector<FpVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(p_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.p_ != p_ || other.ambient_ != ambient_) fail(ErrorKind::ShapeMismatch, "subspace meet mismatch");
  // Solve sum_i x_i u_i = sum_j y_j w_j and map the solutions back.
  const std::size_t du = dim();
  const std::size_t dw = other.dim();
  FpMatrix m(ambient_, du + dw, p_);
  for (std::size_t i = 0; i < du; ++i) {
    for (std::size_t c = 0; c < ambient_; ++c) m(c, i) = basis_[i][c];
  }
  for (std::size_t j = 0; j < dw; ++j) {
    for (std::size_t c = 0; c < ambient_; ++c) m(c, du + j) = (p_ - other.basis_[j][c]) % p_;
  }
  std::vector<FpVector> meet;
  for (const auto& sol : kernel_basis(m)) {
    FpVector v(ambient_, 0);
    for (std::size_t i = 0; i < du; ++i) {
      for (std::size_t c = 0; c < ambient_; ++c) {
        v[c] = static_cast<std::uint32_t>((v[c] + static_cast<std::uint64_t>(sol[i]) * basis_[i][c]) % p_);
      }
    }
    meet.push_back(std::move(v));
  }
  return span(p_, ambient_, meet);
}

Subspace Subspace::image(const FpMatrix& m) const {
  std::vector<FpVector> images;
  images.reserve(basis_.size());
  for (const auto& b : basis_) images.push_back(m.apply(b));
  return span(p_, m.rows(), images);
}

std::vector<FpVector> Subspace::elements() const {
  std::vector<FpVector> out;
  std::vector<std::uint32_t> combo(dim(), 0);
  while (true) {
    FpVector v(ambient_, 0);
    for (std::size_t i = 0; i < combo.size(); ++i) {
      for (std::size_t c = 0; c < ambient_; ++c) {
        v[c] = static_cast<std::uint32_t>((v[c] + static_cast<std::uint64_t>(combo[i]) * basis_[i][c]) % p_);
      }
    }
    out.push_back(std::move(v));
    std::size_t k = 0;
    while (k < combo.size() && ++combo[k] == p_) combo[k++] = 0;
    if (k == combo.size()) break;
  }
  return out;
}

}  // namespace skewfq
