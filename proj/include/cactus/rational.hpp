#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cactus {

using BigInt = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Every constructor canonicalizes, so two Rationals compare equal exactly
/// when their numerators and denominators are equal. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(BigInt value);        // NOLINT(google-explicit-constructor)
  Rational(BigInt numerator, BigInt denominator);
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "p" or "p/q" as produced by to_string().
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }

  /// "p/q", with "/q" omitted when q == 1.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::size_t hash() const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cactus

template <>
struct std::hash<cactus::Rational> {
  std::size_t operator()(const cactus::Rational& r) const { return r.hash(); }
};
