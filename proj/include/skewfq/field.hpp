#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewfq/linalg.hpp"

namespace skewfq {

inline constexpr std::size_t kMaxFieldDegree = 16;
inline constexpr std::uint32_t kMaxCharacteristic = 1U << 15;

using Coords = std::array<std::uint32_t, kMaxFieldDegree>;

class FieldCtx;
class FqElem;

/// Shared, immutable handle to a finite field context.
using Field = std::shared_ptr<const FieldCtx>;

bool is_prime(std::uint64_t n);

/// F_p[x]/(modulus). When `modulus` is omitted, the lexicographically smallest
/// monic irreducible of degree n is used (coefficients compared from the
/// constant term upward). `modulus` lists coefficients low-to-high and must be
/// monic of degree n.
Field make_field(std::uint32_t p, unsigned n, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// The smallest monic irreducible of degree n over F_p, low-to-high.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned n);

/// True iff the monic polynomial `f` (low-to-high over F_p) is irreducible.
bool is_irreducible_over_prime_field(std::span<const std::uint32_t> f, std::uint32_t p);

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return n_; }
  /// q = p^n.
  std::uint64_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// Matrix of x -> x^p on power-basis coordinates (column convention).
  const FpMatrix& frobenius_matrix() const noexcept { return frob_; }

  FqElem zero() const;
  FqElem one() const;
  /// The class of x in F_p[x]/(modulus), printed as `a`.
  FqElem generator() const;
  FqElem constant(std::int64_t c) const;
  FqElem from_coords(std::span<const std::uint32_t> coords) const;
  /// Element whose coordinates are the base-p digits of `index` (constant
  /// term least significant). Indices enumerate the field as 0..q-1.
  FqElem element(std::uint64_t index) const;
  std::vector<FqElem> elements() const;

  /// Structural equality: same p and modulus.
  bool same_as(const FieldCtx& other) const noexcept;

  std::string describe() const;

  // Coordinate-level kernels; callers guarantee the inputs are reduced.
  Coords add(const Coords& x, const Coords& y) const;
  Coords sub(const Coords& x, const Coords& y) const;
  Coords neg(const Coords& x) const;
  Coords mul(const Coords& x, const Coords& y) const;
  Coords apply_frobenius(const Coords& x, unsigned k) const;

 private:
  friend Field make_field(std::uint32_t, unsigned, std::optional<std::vector<std::uint32_t>>);
  FieldCtx(std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  unsigned n_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  // x^d mod modulus for d = n .. 2n-2.
  std::vector<Coords> reduction_;
  FpMatrix frob_;
  // frob_powers_[k] = frob^k for k < n.
  std::vector<FpMatrix> frob_powers_;
};

class FqElem {
 public:
  FqElem(Field field, const Coords& coords) : field_(std::move(field)), coords_(coords) {}

  const Field& field() const noexcept { return field_; }
  const FieldCtx& ctx() const noexcept { return *field_; }
  std::span<const std::uint32_t> coords() const noexcept { return {coords_.data(), field_->degree()}; }
  const Coords& raw() const noexcept { return coords_; }
  std::uint64_t index() const noexcept;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Number of nonzero power-basis coordinates.
  std::size_t term_count() const noexcept;

  FqElem operator+(const FqElem& y) const;
  FqElem operator-(const FqElem& y) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& y) const;
  FqElem operator/(const FqElem& y) const;
  FqElem& operator+=(const FqElem& y) { return *this = *this + y; }
  FqElem& operator-=(const FqElem& y) { return *this = *this - y; }
  FqElem& operator*=(const FqElem& y) { return *this = *this * y; }

  bool operator==(const FqElem& y) const;
  /// Orders by index; both operands must live in the same field.
  std::strong_ordering operator<=>(const FqElem& y) const;

 private:
  Field field_;
  Coords coords_;
};

/// Throws FieldMismatch unless both fields are structurally equal.
void check_same_field(const FieldCtx& x, const FieldCtx& y);

FqElem inverse(const FqElem& x);
FqElem pow(const FqElem& x, std::uint64_t e);
/// theta^k(x) = x^(p^k), k reduced mod n.
FqElem frobenius(const FqElem& x, std::uint64_t k);
/// theta^(-k)(x).
FqElem frobenius_inverse(const FqElem& x, std::uint64_t k);

/// N_i(a) = s^(i-1)(a) ... s(a) a with s = theta^frob_power; N_0(a) = 1.
FqElem norm(const FqElem& a, std::uint64_t i, unsigned frob_power = 1);

/// a^x = s(x) a x^-1 with s = theta^frob_power (no derivation over fields).
FqElem conjugate(const FqElem& a, const FqElem& x, unsigned frob_power = 1);

struct ConjClassReport {
  FqElem representative;
  std::vector<FqElem> members;  // sorted by index
  unsigned centralizer_degree;
};

/// Exhaustive partition of F_q into theta^frob_power-conjugacy classes,
/// ordered by representative index (the smallest member).
std::vector<ConjClassReport> conjugacy_classes(const Field& field, unsigned frob_power = 1);

struct Centralizer {
  unsigned degree;                 // dimension over F_p
  std::vector<FqElem> basis;       // canonical F_p-basis
};

/// {x : s(x) a = a x} with s = theta^frob_power, solved as an F_p-linear system.
Centralizer centralizer(const FqElem& a, unsigned frob_power = 1);

std::uint64_t multiplicative_order(const FqElem& x);

/// Smallest element (by index) of multiplicative order q-1.
FqElem primitive_element(const Field& field);

/// Embedding of F_{p^n} into F_{p^l}, n | l, sending the small generator to
/// the smallest-index root of the small modulus in the large field.
class FieldEmbedding {
 public:
  FieldEmbedding(Field small, Field large);

  const Field& small() const noexcept { return small_; }
  const Field& large() const noexcept { return large_; }
  const FqElem& generator_image() const noexcept { return image_; }

  FqElem operator()(const FqElem& x) const;
  /// Whether `y` lies in the image of the embedding.
  bool in_image(const FqElem& y) const;

 private:
  Field small_;
  Field large_;
  FqElem image_;
  std::vector<bool> image_mask_;
};

/// Descending powers of `a`, e.g. `a^2+2*a+1`; zero prints as `0`.
std::string to_string(const FqElem& x);

/// Modulus polynomial in `x`, e.g. `x^2+x+1`.
std::string modulus_string(const FieldCtx& ctx);

}  // namespace skewfq
