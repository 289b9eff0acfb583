#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "skewfq/field.hpp"
#include "skewfq/linalg.hpp"
#include "skewfq/skew.hpp"

namespace skewfq {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

/// Dense matrix over F_q.
class FqMatrix {
 public:
  FqMatrix(Field field, std::size_t rows, std::size_t cols);

  static FqMatrix identity(const Field& field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FqElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FqElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::vector<FqElem> row(std::size_t r) const;
  /// All entries, row-major.
  const std::vector<FqElem>& entries() const noexcept { return data_; }

  FqMatrix operator*(const FqMatrix& rhs) const;
  FqMatrix operator+(const FqMatrix& rhs) const;
  FqMatrix operator-(const FqMatrix& rhs) const;
  /// c * M.
  FqMatrix scale_left(const FqElem& c) const;
  /// Entry-wise theta^k.
  FqMatrix frobenius(unsigned k) const;
  bool operator==(const FqMatrix& rhs) const;
  bool is_zero() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FqElem> data_;
};

/// Flattens a vector of F_q^m to F_p^(mn): entry i coordinate k sits at i*n + k.
FpVector flatten(const std::vector<FqElem>& v);
std::vector<FqElem> unflatten(const Field& field, std::span<const std::uint32_t> v);

/// Additive map on F_q^rank held as an F_p matrix acting on flattened
/// column vectors.
struct LinMap {
  Field field;
  std::size_t rank;
  FpMatrix matrix;

  /// Matrix of an additive map given as a function, by evaluation on the
  /// F_p-basis.
  static LinMap from_function(const Field& field, std::size_t rank,
                              const std::function<std::vector<FqElem>(const std::vector<FqElem>&)>& fn);
  static LinMap identity(const Field& field, std::size_t rank);
  /// v -> c v.
  static LinMap scalar(const FqElem& c, std::size_t rank);

  std::vector<FqElem> operator()(const std::vector<FqElem>& v) const;
  LinMap operator*(const LinMap& rhs) const;
  LinMap operator+(const LinMap& rhs) const;
  bool operator==(const LinMap& rhs) const;
};

/// T_a(x) = sigma(x) a on F_q.
LinMap plt_of_element(const FrobeniusTwist& twist, const FqElem& a);

/// T_C(v) = sigma(v) C on row vectors of F_q^m.
LinMap plt_of_matrix(const FrobeniusTwist& twist, const FqMatrix& c);

struct Companion {
  FieldSkew poly;
  FqMatrix matrix;
};

/// Rows e_1, ..., e_(m-1), then (-a_0, ..., -a_(m-1)).
Companion companion(const FieldSkew& p);
/// T_p = T_{C(p)} on F_q^m.
LinMap plt_of_companion(const FieldSkew& p);

/// f(T) = sum a_i T^i with a_i acting by left multiplication.
LinMap poly_matrix(const FieldSkew& f, const LinMap& t);
std::vector<FqElem> apply_poly(const FieldSkew& f, const LinMap& t, const std::vector<FqElem>& v);

/// Matrix of an additive map in the standard basis: row i holds T(e_i).
FqMatrix matrix_in_basis(const LinMap& t);

/// f(C) in M_m(F_q)[t; sigma]: sum a_i N_i(C) with N_(i+1)(C) = sigma(N_i(C)) C.
FqMatrix evaluate_at_matrix(const FieldSkew& f, const FqMatrix& c);

struct KernelReport {
  Subspace space;            // ker f(T_a) over F_p
  unsigned centralizer_degree;
  std::size_t dim_over_centralizer;
};

/// ker f(T_a); cross-checked against {x != 0 : f(a^x) = 0} when q is small.
KernelReport plt_kernel(const FieldSkew& f, const FqElem& a);

/// Coordinates of f mod p, computed as f(T_p)(1, 0, ..., 0).
std::vector<FqElem> remainder_row(const FieldSkew& f, const FieldSkew& p);

/// F_p-basis of {B : C B = sigma(B) C}, C = C(p).
std::vector<FqMatrix> eigenring(const FieldSkew& p);

struct Intertwiners {
  std::vector<FqMatrix> basis;     // F_p-basis of {B : C1 B = sigma(B) C2}
  bool is_isomorphic;
  bool exhaustive;                 // whole solution space searched
  bool certain;                    // exhaustive, or an invertible witness was found
  std::optional<FqMatrix> witness; // an invertible solution, if found
};

Intertwiners intertwiners(const FieldSkew& p1, const FieldSkew& p2, std::uint64_t seed = kDefaultSeed);

/// Whether the square matrix B over F_q is invertible.
bool is_invertible(const FqMatrix& b);

struct HomSpace {
  Subspace kernel;                    // ker f(T_p) inside F_p^(mn)
  std::vector<FieldSkew> witnesses;   // g = sum v_i t^i per basis vector, with f g in Rp
};

HomSpace hom_space(const FieldSkew& f, const FieldSkew& p);

/// p g in Rp, decided by g(T_p)(1, 0, ..., 0) in ker p(T_p) and by division.
bool idealizer_test(const FieldSkew& g, const FieldSkew& p);

struct CompanionAnnihilation {
  bool t_in_idealizer;
  bool companion_annihilated;  // p(C(p)) = 0
  bool equivalent;
};

CompanionAnnihilation companion_annihilation(const FieldSkew& p);

/// All a in F_q with f(a) = 0, by exhaustive evaluation.
std::vector<FqElem> skew_roots(const FieldSkew& f);

struct GMClass {
  FqElem representative;
  std::size_t class_size;
  std::size_t root_count;
  std::size_t kernel_dim;  // dim over C(rep) of ker f(T_rep)
};

struct GMAudit {
  std::vector<GMClass> classes;  // classes containing a root
  std::size_t sum;
  int degree;
  bool bound_held;
  bool wedderburn_equality;
};

GMAudit gm_audit(const FieldSkew& f);

struct KernelSplit {
  FieldSkew llclm;
  FieldSkew f_prime;  // llclm = f_prime g
  std::size_t dim_f;
  std::size_t dim_g;
  std::size_t dim_m;
  bool direct_sum;     // ker m(T) = ker f(T) (+) ker g(T)
  bool image_matches;  // g(T)(ker f(T)) = ker f_prime(T)
};

/// Requires rgcd(f, g) = 1 (NotCoprime otherwise); T = T_a.
KernelSplit kernel_split(const FieldSkew& f, const FieldSkew& g, const FqElem& a);

struct PhiTransform {
  FieldSkew f_prime;                // llclm(f, g) = f_prime g
  std::vector<FqElem> roots;        // V(f)
  std::vector<FqElem> images;       // phi_g(V(f)), sorted, deduplicated
  std::vector<FqElem> target_roots; // V(f_prime)
};

/// phi_g(x) = x^(g(x)) on the roots of f, compared with the roots of the
/// similar polynomial f_prime.
PhiTransform phi_transform(const FieldSkew& g, const FieldSkew& f);

struct Hilbert90 {
  std::vector<FqElem> roots;      // V(t^n - 1)
  std::vector<FqElem> delta_one;  // {theta(x) x^-1 : x != 0}
  bool equal;
};

Hilbert90 hilbert90(const Field& field);

/// f^n_i(a): sum of all words in sigma and delta with i sigmas and n - i
/// deltas, by f^(n+1)_i = sigma f^n_(i-1) + delta f^n_i.
template <class Twist>
typename Twist::Elem word_map(const Twist& twist, std::size_t n, std::size_t i, const typename Twist::Elem& a);

/// T_b^n(a v) = sum_i f^n_i(a) T_b^i(v).
template <class Twist>
bool word_map_identity(const Twist& twist, const typename Twist::Elem& b, const typename Twist::Elem& a,
                       const typename Twist::Elem& v, std::size_t n);

}  // namespace skewfq
