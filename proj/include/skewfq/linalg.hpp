#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace skewfq {

using FpVector = std::vector<std::uint32_t>;

std::uint32_t mod_inverse(std::uint32_t x, std::uint32_t p);
std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p);

/// Dense matrix over the prime field Z/p. Acts on column vectors.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  static FpMatrix identity(std::size_t n, std::uint32_t p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  /// Overwrites column `c` with `v` (entries already reduced mod p).
  void set_column(std::size_t c, std::span<const std::uint32_t> v);
  FpVector column(std::size_t c) const;
  FpVector row(std::size_t r) const;

  FpVector apply(std::span<const std::uint32_t> v) const;

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  bool operator==(const FpMatrix& rhs) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> data_;
};

/// Reduces `m` in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(FpMatrix& m);

std::size_t rank(FpMatrix m);

/// Basis of {v : m v = 0}, in canonical reduced echelon form.
std::vector<FpVector> kernel_basis(const FpMatrix& m);

/// Some x with m x = b (free variables set to zero), if one exists.
std::optional<FpVector> solve(const FpMatrix& m, std::span<const std::uint32_t> b);

/// A subspace of (Z/p)^d held by its reduced echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace(std::uint32_t p, std::size_t ambient_dim);

  static Subspace span(std::uint32_t p, std::size_t ambient_dim, const std::vector<FpVector>& vectors);
  static Subspace kernel(const FpMatrix& m);

  std::uint32_t modulus() const noexcept { return p_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<FpVector>& basis() const noexcept { return basis_; }

  bool contains(std::span<const std::uint32_t> v) const;
  bool contains(const Subspace& other) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace image(const FpMatrix& m) const;

  /// Every vector of the subspace; only sensible when p^dim is small.
  std::vector<FpVector> elements() const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::uint32_t p_;
  std::size_t ambient_;
  std::vector<FpVector> basis_;
};

}  // namespace skewfq
