#include "skewfq/trunc.hpp"

#include <algorithm>
#include <sstream>

#include "skewfq/error.hpp"
#include "skewfq/field.hpp"
#include "skewfq/linalg.hpp"

namespace skewfq {

TruncRing make_trunc_ring(std::uint32_t p, unsigned m) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) fail(ErrorKind::InvalidArgument, "characteristic too large");
  if (m < 1 || m > 32) fail(ErrorKind::InvalidArgument, "truncation length must lie in [1, 32]");
  return TruncRing(new TruncCtx(p, m));
}

TruncCtx::TruncCtx(std::uint32_t p, unsigned m) : p_(p), m_(m), size_(1) {
  for (unsigned i = 0; i < m_; ++i) {
    size_ = size_ > (UINT64_MAX / p_) ? UINT64_MAX : size_ * p_;
  }
}

TruncElem TruncCtx::zero() const { return TruncElem(shared_from_this(), std::vector<std::uint32_t>(m_, 0)); }

TruncElem TruncCtx::one() const { return constant(1); }

TruncElem TruncCtx::generator() const {
  std::vector<std::uint32_t> c(m_, 0);
  if (m_ > 1) c[1] = 1;
  return TruncElem(shared_from_this(), std::move(c));
}

TruncElem TruncCtx::constant(std::int64_t c) const {
  std::vector<std::uint32_t> v(m_, 0);
  const std::int64_t r = c % static_cast<std::int64_t>(p_);
  v[0] = static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  return TruncElem(shared_from_this(), std::move(v));
}

TruncElem TruncCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  std::vector<std::uint32_t> v(m_, 0);
  for (std::size_t i = 0; i < coeffs.size() && i < m_; ++i) v[i] = coeffs[i] % p_;
  return TruncElem(shared_from_this(), std::move(v));
}

TruncElem TruncCtx::element(std::uint64_t index) const {
  if (index >= size_) fail(ErrorKind::InvalidArgument, "element index out of range");
  std::vector<std::uint32_t> v(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    v[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return TruncElem(shared_from_this(), std::move(v));
}

std::vector<TruncElem> TruncCtx::elements() const {
  std::vector<TruncElem> out;
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

bool TruncCtx::same_as(const TruncCtx& other) const noexcept {
  return this == &other || (p_ == other.p_ && m_ == other.m_);
}

std::string TruncCtx::describe() const { return "p=" + std::to_string(p_) + ",m=" + std::to_string(m_); }

void check_same_ring(const TruncCtx& x, const TruncCtx& y) {
  if (!x.same_as(y)) fail(ErrorKind::RingMismatch, "elements belong to different truncated rings");
}

TruncElem::TruncElem(TruncRing ring, std::vector<std::uint32_t> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  coeffs_.resize(ring_->length(), 0);
}

std::uint64_t TruncElem::index() const noexcept {
  std::uint64_t idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) idx = idx * ring_->characteristic() + coeffs_[i];
  return idx;
}

bool TruncElem::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool TruncElem::is_one() const noexcept {
  return coeffs_[0] == 1 && std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

std::size_t TruncElem::term_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c != 0; }));
}

TruncElem TruncElem::operator+(const TruncElem& y) const {
  check_same_ring(*ring_, *y.ring_);
  const auto p = ring_->characteristic();
  std::vector<std::uint32_t> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (coeffs_[i] + y.coeffs_[i]) % p;
  return TruncElem(ring_, std::move(out));
}

TruncElem TruncElem::operator-(const TruncElem& y) const {
  check_same_ring(*ring_, *y.ring_);
  const auto p = ring_->characteristic();
  std::vector<std::uint32_t> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (coeffs_[i] + p - y.coeffs_[i]) % p;
  return TruncElem(ring_, std::move(out));
}

TruncElem TruncElem::operator-() const { return ring_->zero() - *this; }

TruncElem TruncElem::operator*(const TruncElem& y) const {
  check_same_ring(*ring_, *y.ring_);
  const std::uint64_t p = ring_->characteristic();
  const std::size_t m = coeffs_.size();
  std::vector<std::uint64_t> acc(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < m; ++j) acc[i + j] = (acc[i + j] + coeffs_[i] * static_cast<std::uint64_t>(y.coeffs_[j])) % p;
  }
  std::vector<std::uint32_t> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(acc[i]);
  return TruncElem(ring_, std::move(out));
}

bool TruncElem::operator==(const TruncElem& y) const {
  check_same_ring(*ring_, *y.ring_);
  return coeffs_ == y.coeffs_;
}

std::strong_ordering TruncElem::operator<=>(const TruncElem& y) const {
  check_same_ring(*ring_, *y.ring_);
  return index() <=> y.index();
}

TruncElem derive(const TruncElem& x) {
  const std::uint64_t p = x.ctx().characteristic();
  const auto& c = x.coeffs();
  std::vector<std::uint32_t> out(c.size(), 0);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = static_cast<std::uint32_t>(i % p * c[i] % p);
  return TruncElem(x.ring(), std::move(out));
}

bool derivation_is_leibniz(const TruncCtx& ring) noexcept {
  return ring.length() <= 1 || ring.length() % ring.characteristic() == 0;
}

TruncElem inverse(const TruncElem& x) {
  if (!x.is_unit()) fail(ErrorKind::NotInvertible, "non-unit in truncated ring");
  const auto p = x.ctx().characteristic();
  // x = c (1 - n) with n nilpotent; x^-1 = c^-1 (1 + n + n^2 + ...).
  const TruncElem c_inv = x.ctx().constant(mod_inverse(x.coeffs()[0], p));
  const TruncElem nil = x.ctx().one() - c_inv * x;
  TruncElem sum = x.ctx().one();
  TruncElem term = x.ctx().one();
  for (unsigned i = 1; i < x.ctx().length(); ++i) {
    term = term * nil;
    sum = sum + term;
  }
  return sum * c_inv;
}

std::string to_string(const TruncElem& x) {
  std::ostringstream os;
  bool first = true;
  const auto& c = x.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << c[i] << '*';
    os << 'u';
    if (i > 1) os << '^' << i;
  }
  return first ? "0" : os.str();
}

}  // namespace skewfq
