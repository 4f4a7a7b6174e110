#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torsorlat/error.hpp"

namespace torsorlat {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Column vectors are IntMat with one column. Matrices with zero rows or
/// zero columns are legal and behave as rank 0 objects everywhere.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMat from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMat column(const std::vector<Integer>& entries);
  static IntMat column(std::initializer_list<long> entries);
  static IntMat diagonal(const std::vector<Integer>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Integer>& entries() const noexcept { return data_; }

  IntMat col(std::size_t j) const;
  IntMat row(std::size_t i) const;
  IntMat cols_range(std::size_t first, std::size_t last) const;
  IntMat rows_range(std::size_t first, std::size_t last) const;
  IntMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  IntMat transpose() const;

  bool is_zero() const;
  bool is_identity() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  /// Appends the columns of `other` (same row count) on the right.
  IntMat hstack(const IntMat& other) const;
  /// Appends the rows of `other` (same column count) below.
  IntMat vstack(const IntMat& other) const;

  friend bool operator==(const IntMat& a, const IntMat& b);
  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend IntMat operator+(const IntMat& a, const IntMat& b);
  friend IntMat operator-(const IntMat& a, const IntMat& b);
  friend IntMat operator-(const IntMat& a);
  friend IntMat operator*(const Integer& s, const IntMat& a);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMat& m);

/// U * A * V == D with U, V unimodular and D in Smith normal form.
struct SmithForm {
  IntMat U;
  IntMat D;
  IntMat V;

  /// Nonzero diagonal entries d1 | d2 | ... (all positive).
  std::vector<Integer> nonzero_diagonal() const;
  std::size_t rank() const;
};

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk with
/// every di >= 2 and di | di+1.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  /// Normalizes an arbitrary list of cyclic orders (0 means a free factor,
  /// 1 is dropped) into invariant-factor form.
  static FinAbGroup from_cyclic_orders(const std::vector<Integer>& orders, std::size_t free_rank = 0);
  static FinAbGroup trivial() { return {}; }

  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  std::size_t free_rank() const noexcept { return free_rank_; }

  bool is_trivial() const noexcept { return factors_.empty() && free_rank_ == 0; }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  /// Product of the invariant factors; nullopt for infinite groups.
  std::optional<Integer> order() const;
  /// The torsion subgroup (free part dropped).
  FinAbGroup torsion() const;
  /// The p-primary part of the torsion subgroup.
  FinAbGroup p_part(unsigned long p) const;

  /// "0", "Z/2", "Z^2 + Z/2 + Z/6".
  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<Integer> factors_;
  std::size_t free_rank_ = 0;
};

/// Smith normal form with pivoting on the entry of least absolute value,
/// ties broken by lowest (row, col).
SmithForm snf(const IntMat& a);

/// Only the diagonal of the Smith form (no transforms are accumulated).
std::vector<Integer> smith_invariants(const IntMat& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMat& a);

/// Integer matrix rank.
std::size_t rank(const IntMat& a);

/// Row-style Hermite normal form: nonzero rows only, positive pivots,
/// entries above each pivot reduced into [0, pivot).
IntMat hermite_rows(const IntMat& a);

/// Columns form a basis of the (automatically saturated) lattice
/// {x : A x = 0}, canonicalized through the Hermite form.
IntMat kernel_basis(const IntMat& a);

/// Z^ambient_rank / (column span of sub), in invariant-factor form.
FinAbGroup quotient(std::size_t ambient_rank, const IntMat& sub);

/// Integer solution X of A X = B if one exists.
std::optional<IntMat> solve(const IntMat& a, const IntMat& b);

/// True if the columns of `basis` are linearly independent and span a
/// saturated sublattice.
bool is_saturated_basis(const IntMat& basis);

/// Integer left inverse P (P * basis == I) of a saturated basis matrix.
IntMat left_inverse(const IntMat& basis);

/// True if both column spans are the same lattice.
bool same_lattice(const IntMat& a, const IntMat& b);

Integer gcd_of_entries(const IntMat& a);

/// Exponent of the prime p in |n|; n must be nonzero.
unsigned valuation(const Integer& n, unsigned long p);

bool is_prime(unsigned long n);

}  // namespace torsorlat
