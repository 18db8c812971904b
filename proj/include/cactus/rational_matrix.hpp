#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cactus/rational.hpp"

namespace cactus {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> entries() const { return entries_; }

  /// Copy with the listed rows and columns removed (indices must be distinct).
  RationalMatrix without(std::span<const std::size_t> drop) const;

  std::vector<Rational> multiply(std::span<const Rational> x) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Rows with
/// fractional entries are first scaled to integers, so all elimination runs on
/// big integers with exact divisions. A 0x0 matrix has determinant 1.
Rational determinant_exact(const RationalMatrix& m);

/// Solves m * x = b exactly. Throws SingularMatrix when det(m) == 0.
std::vector<Rational> solve_exact(const RationalMatrix& m, std::span<const Rational> b);

/// Solves m * X = B for every column of B at once; returns X.
RationalMatrix solve_exact(const RationalMatrix& m, const RationalMatrix& rhs);

RationalMatrix inverse_exact(const RationalMatrix& m);

}  // namespace cactus
