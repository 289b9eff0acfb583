#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace skewfq {

class TruncCtx;
class TruncElem;

/// F_p[u]/(u^m) with the derivation d/du.
using TruncRing = std::shared_ptr<const TruncCtx>;

TruncRing make_trunc_ring(std::uint32_t p, unsigned m);

class TruncCtx : public std::enable_shared_from_this<TruncCtx> {
 public:
  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned length() const noexcept { return m_; }
  /// p^m.
  std::uint64_t order() const noexcept { return size_; }

  TruncElem zero() const;
  TruncElem one() const;
  /// The class of u.
  TruncElem generator() const;
  TruncElem constant(std::int64_t c) const;
  TruncElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// Base-p digits of `index`, constant coefficient least significant.
  TruncElem element(std::uint64_t index) const;
  std::vector<TruncElem> elements() const;

  bool same_as(const TruncCtx& other) const noexcept;
  std::string describe() const;

 private:
  friend TruncRing make_trunc_ring(std::uint32_t, unsigned);
  TruncCtx(std::uint32_t p, unsigned m);

  std::uint32_t p_;
  unsigned m_;
  std::uint64_t size_;
};

class TruncElem {
 public:
  TruncElem(TruncRing ring, std::vector<std::uint32_t> coeffs);

  const TruncRing& ring() const noexcept { return ring_; }
  const TruncCtx& ctx() const noexcept { return *ring_; }
  /// Coefficients of 1, u, ..., u^(m-1).
  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
  std::uint64_t index() const noexcept;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Units are exactly the elements with nonzero constant term.
  bool is_unit() const noexcept { return coeffs_[0] != 0; }
  std::size_t term_count() const noexcept;

  TruncElem operator+(const TruncElem& y) const;
  TruncElem operator-(const TruncElem& y) const;
  TruncElem operator-() const;
  TruncElem operator*(const TruncElem& y) const;
  TruncElem& operator+=(const TruncElem& y) { return *this = *this + y; }
  TruncElem& operator-=(const TruncElem& y) { return *this = *this - y; }
  TruncElem& operator*=(const TruncElem& y) { return *this = *this * y; }

  bool operator==(const TruncElem& y) const;
  std::strong_ordering operator<=>(const TruncElem& y) const;

 private:
  TruncRing ring_;
  std::vector<std::uint32_t> coeffs_;
};

void check_same_ring(const TruncCtx& x, const TruncCtx& y);

/// Formal derivative d/du.
TruncElem derive(const TruncElem& x);

/// Whether d/du satisfies the Leibniz rule on F_p[u]/(u^m): it does exactly
/// when m <= 1 or p divides m, since d/du(u^m) = m u^(m-1) must vanish.
bool derivation_is_leibniz(const TruncCtx& ring) noexcept;

/// Inverse of a unit (geometric series on the nilpotent part).
TruncElem inverse(const TruncElem& x);

/// Descending powers of `u`, e.g. `u^2+2*u+1`.
std::string to_string(const TruncElem& x);

}  // namespace skewfq
