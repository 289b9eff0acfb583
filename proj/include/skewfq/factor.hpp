#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "skewfq/cpoly.hpp"
#include "skewfq/skew.hpp"

namespace skewfq {

/// f(t) = sum a_i t^i  ->  f^[](x) = sum a_i x^[i]. Requires sigma = theta.
CPoly bracket_map(const FieldSkew& f);

/// Inverse of bracket_map on bracket-supported polynomials (NotBracketPoly
/// otherwise).
FieldSkew unbracket_map(const CPoly& g);

/// f in R h, decided by skew right division and by divisibility of the
/// brackets in F_q[x]; the two answers are required to agree.
bool divides_via_bracket(const FieldSkew& f, const FieldSkew& h);

/// t - c for every root c of f, sorted by c; roots of f^[] and roots found by
/// skew evaluation are compared.
std::vector<FieldSkew> linear_right_factors(const FieldSkew& f);

struct SearchOptions {
  std::size_t min_degree = 1;
  /// 0 means deg f - 1.
  std::size_t max_degree = 0;
  std::size_t cap = kDefaultDivisorCap;
};

/// Smallest-degree monic right factor h of the monic f with
/// min_degree <= deg h <= max_degree, taken from the bracket divisors of
/// f^[] in canonical order.
std::optional<FieldSkew> right_factor_search(const FieldSkew& f, const SearchOptions& options = {});

struct IrreducibilityCertificate {
  CPoly bracket_poly;
  CFactorization bracket_factors;
  /// A proper right factor when f is reducible.
  std::optional<FieldSkew> right_factor;
};

struct IrreducibilityResult {
  bool irreducible;
  IrreducibilityCertificate certificate;
};

IrreducibilityResult is_irreducible(const FieldSkew& f, std::size_t cap = kDefaultDivisorCap);

struct SkewFactorization {
  FqElem unit;
  std::vector<FieldSkew> factors;                     // product order, left to right
  std::vector<IrreducibilityCertificate> certificates; // one per factor

  FieldSkew product() const;
};

/// Peels smallest-degree right factors until an irreducible remains.
SkewFactorization factorize(const FieldSkew& f, std::size_t cap = kDefaultDivisorCap);

/// Up to k distinct complete factorizations. The first is factorize(f); the
/// rest come from backtracking over right-factor choices, fewest deviations
/// from the canonical choice first.
std::vector<SkewFactorization> alternate_factorizations(const FieldSkew& f, std::size_t k,
                                                        std::size_t cap = kDefaultDivisorCap);

/// Monic irreducible right factors of the monic f (f itself included when
/// irreducible), in canonical bracket order.
std::vector<FieldSkew> irreducible_right_factors(const FieldSkew& f, std::size_t cap = kDefaultDivisorCap);

/// Degree over F_q of the splitting field of f^[].
std::uint64_t splitting_field_degree(const FieldSkew& f);

struct ExtensionRootReport {
  std::uint32_t p;
  unsigned n;
  unsigned l;
  bool degenerate;          // l = n
  bool premise_holds;       // l divides (p-1)n, so G commutes with F_{p^l}
  std::size_t delta_l_size; // |Delta_l(1)|
  std::size_t delta_n_size; // |Delta_n(1)|
  bool annihilates_delta_l;
  std::size_t root_count;          // roots of G in F_{p^l}
  std::size_t roots_outside_small; // roots not in the embedded F_{p^n}
};

/// Evaluates G(t) = t^((p-1)n+1) - t over F_{p^l} against Delta_l(1).
ExtensionRootReport extension_root_check(const Field& small, const Field& large);

}  // namespace skewfq
