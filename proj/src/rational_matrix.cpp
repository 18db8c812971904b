#include "cactus/rational_matrix.hpp"

#include <algorithm>
#include <utility>

#include "cactus/errors.hpp"

namespace cactus {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("entry count does not match rows x cols");
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::without(std::span<const std::size_t> drop) const {
  auto dropped = [&](std::size_t i) { return std::find(drop.begin(), drop.end(), i) != drop.end(); };
  std::vector<std::size_t> keep_rows;
  std::vector<std::size_t> keep_cols;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!dropped(r)) keep_rows.push_back(r);
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!dropped(c)) keep_cols.push_back(c);
  }
  RationalMatrix out(keep_rows.size(), keep_cols.size());
  for (std::size_t i = 0; i < keep_rows.size(); ++i) {
    for (std::size_t j = 0; j < keep_cols.size(); ++j) {
      out(i, j) = (*this)(keep_rows[i], keep_cols[j]);
    }
  }
  return out;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionError("vector length does not match column count");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !x[c].is_zero()) acc += (*this)(r, c) * x[c];
    }
    y[r] = std::move(acc);
  }
  return y;
}

namespace {

// Integer augmented system [A | B] produced by clearing denominators row-wise.
// Row scaling leaves the solution unchanged and multiplies det(A) by `scale`.
struct IntegerSystem {
  std::size_t n = 0;
  std::size_t width = 0;  // n + number of right-hand sides
  std::vector<BigInt> cells;
  Rational scale{1};

  BigInt& at(std::size_t r, std::size_t c) { return cells[r * width + c]; }
};

IntegerSystem to_integer_system(const RationalMatrix& a, const RationalMatrix* rhs) {
  IntegerSystem sys;
  sys.n = a.rows();
  const std::size_t extra = rhs ? rhs->cols() : 0;
  sys.width = sys.n + extra;
  sys.cells.resize(sys.n * sys.width);
  for (std::size_t r = 0; r < sys.n; ++r) {
    BigInt row_lcm = 1;
    for (std::size_t c = 0; c < sys.n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(r, c).denominator().get_mpz_t());
    }
    for (std::size_t c = 0; c < extra; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), (*rhs)(r, c).denominator().get_mpz_t());
    }
    for (std::size_t c = 0; c < sys.n; ++c) {
      sys.at(r, c) = a(r, c).numerator() * (row_lcm / a(r, c).denominator());
    }
    for (std::size_t c = 0; c < extra; ++c) {
      const Rational& v = (*rhs)(r, c);
      sys.at(r, sys.n + c) = v.numerator() * (row_lcm / v.denominator());
    }
    sys.scale *= Rational(row_lcm);
  }
  return sys;
}

// Bareiss forward elimination in place. Returns det of the integer left block,
// or 0 if singular (in which case elimination stops early).
BigInt bareiss_forward(IntegerSystem& sys) {
  const std::size_t n = sys.n;
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (sys.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sys.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < sys.width; ++c) std::swap(sys.at(k, c), sys.at(swap_row, c));
      sign = -sign;
    }
    const BigInt pivot = sys.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInt factor = sys.at(i, k);
      for (std::size_t j = k + 1; j < sys.width; ++j) {
        BigInt& cell = sys.at(i, j);
        cell = pivot * cell - factor * sys.at(k, j);
        // Sylvester's identity guarantees this division is exact.
        mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), previous.get_mpz_t());
      }
      sys.at(i, k) = 0;
    }
    previous = pivot;
  }
  return n == 0 ? BigInt(1) : BigInt(sign * previous);
}

}  // namespace

Rational determinant_exact(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  IntegerSystem sys = to_integer_system(m, nullptr);
  return Rational(bareiss_forward(sys)) / sys.scale;
}

RationalMatrix solve_exact(const RationalMatrix& m, const RationalMatrix& rhs) {
  if (!m.is_square()) throw DimensionError("solve with a non-square matrix");
  if (rhs.rows() != m.rows()) throw DimensionError("right-hand side has the wrong row count");
  const std::size_t n = m.rows();
  const std::size_t k = rhs.cols();
  IntegerSystem sys = to_integer_system(m, &rhs);
  const BigInt det = bareiss_forward(sys);
  if (det == 0) throw SingularMatrix();

  // After elimination the last pivot equals +-det of the (row-swapped) block,
  // and det * x is integral, so back substitution stays fraction-free.
  const BigInt last_pivot = n == 0 ? BigInt(1) : BigInt(sys.at(n - 1, n - 1));
  RationalMatrix x(n, k);
  std::vector<BigInt> scaled(n);
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      BigInt acc = last_pivot * sys.at(ii, n + col);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= sys.at(ii, j) * scaled[j];
      mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), sys.at(ii, ii).get_mpz_t());
      scaled[ii] = acc;
    }
    for (std::size_t i = 0; i < n; ++i) x(i, col) = Rational(scaled[i], last_pivot);
  }
  return x;
}

std::vector<Rational> solve_exact(const RationalMatrix& m, std::span<const Rational> b) {
  RationalMatrix rhs(b.size(), 1, std::vector<Rational>(b.begin(), b.end()));
  const RationalMatrix x = solve_exact(m, rhs);
  std::vector<Rational> out(x.entries().begin(), x.entries().end());
  if (m.multiply(out) != std::vector<Rational>(b.begin(), b.end())) {
    throw Error("internal error: exact solve failed re-multiplication check");
  }
  return out;
}

RationalMatrix inverse_exact(const RationalMatrix& m) {
  return solve_exact(m, RationalMatrix::identity(m.rows()));
}

}  // namespace cactus
