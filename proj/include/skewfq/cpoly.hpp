#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewfq/field.hpp"

namespace skewfq {

/// Polynomial in F_q[x], dense low-to-high with no trailing zeros.
class CPoly {
 public:
  explicit CPoly(Field field);
  CPoly(Field field, std::vector<FqElem> coeffs);

  static CPoly constant(const FqElem& c);
  static CPoly monomial(const FqElem& c, std::size_t exponent);
  static CPoly variable(const Field& field);

  const Field& field() const noexcept { return field_; }
  const std::vector<FqElem>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }
  FqElem coeff(std::size_t i) const;
  FqElem leading() const;

  CPoly operator+(const CPoly& g) const;
  CPoly operator-(const CPoly& g) const;
  CPoly operator-() const;
  CPoly operator*(const CPoly& g) const;
  CPoly operator*(const FqElem& c) const;
  bool operator==(const CPoly& g) const;

  /// Value at c (Horner).
  FqElem operator()(const FqElem& c) const;

 private:
  void normalize();

  Field field_;
  std::vector<FqElem> coeffs_;
};

/// f = q g + r with deg r < deg g.
std::pair<CPoly, CPoly> divmod(const CPoly& f, const CPoly& g);
CPoly monic(const CPoly& f);
/// Monic gcd; gcd(0, 0) is rejected.
CPoly gcd(const CPoly& f, const CPoly& g);
CPoly derivative(const CPoly& f);
CPoly powmod(const CPoly& base, std::uint64_t e, const CPoly& modulus);

/// Canonical order: degree first, then coefficients from the constant term
/// upward compared by element index.
bool canonical_less(const CPoly& f, const CPoly& g);

struct CFactor {
  CPoly factor;          // monic irreducible
  unsigned multiplicity;
};

struct CFactorization {
  FqElem unit;
  std::vector<CFactor> factors;  // sorted by canonical_less

  CPoly product() const;
};

/// Square-free decomposition: pairwise coprime square-free monic parts with
/// their multiplicities, f = lc(f) * prod part^mult.
std::vector<CFactor> squarefree_decomposition(const CPoly& f);

/// Irreducible factors of a monic square-free polynomial (deterministic
/// Berlekamp), sorted canonically.
std::vector<CPoly> berlekamp_split(const CPoly& f);

/// Dimension over F_q of the Berlekamp subalgebra of a square-free f, i.e.
/// its number of irreducible factors.
std::size_t berlekamp_rank(const CPoly& f);

CFactorization factorize(const CPoly& f);

/// All roots in F_q, sorted by index.
std::vector<FqElem> roots(const CPoly& f);

bool is_irreducible(const CPoly& f);

inline constexpr std::size_t kDefaultDivisorCap = 4096;

struct DivisorQuery {
  /// Keep only divisors satisfying this predicate (all when empty).
  std::function<bool(const CPoly&)> predicate;
  /// Skip whole degrees up front (all degrees when empty).
  std::function<bool(std::size_t)> degree_filter;
  /// Upper bound on generated candidates.
  std::size_t cap = kDefaultDivisorCap;
  /// Stop after this many matches (0 = unbounded).
  std::size_t max_results = 0;
  /// Throw DegreeOverflow when the cap is hit before any match.
  bool require_complete = false;
};

/// Monic divisors of f, nondecreasing in degree and canonically ordered
/// within a degree; 1 and monic(f) included. `factorization` may be passed to
/// avoid refactoring f.
std::vector<CPoly> divisors(const CPoly& f, const DivisorQuery& query = {},
                            const CFactorization* factorization = nullptr);

/// [i] = (p^i - 1)/(p - 1), [0] = 0.
std::uint64_t bracket_index(std::uint32_t p, unsigned i);
/// i with [i] = e, if any.
std::optional<unsigned> bracket_level(std::uint64_t e, std::uint32_t p);

struct BracketTerm {
  unsigned level;
  FqElem coeff;
};

struct BracketSupport {
  bool is_bracket = false;
  std::vector<BracketTerm> terms;  // ascending level, nonzero coefficients only
};

BracketSupport bracket_support(const CPoly& f, std::uint32_t p);
bool is_bracket(const CPoly& f, std::uint32_t p);

/// e.g. `x^15+(a+1)*x^7+(a+1)*x^3+(a+1)*x+1`.
std::string to_string(const CPoly& f);

}  // namespace skewfq
