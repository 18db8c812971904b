#include "cactus/rational.hpp"

#include <functional>
#include <ostream>

#include "cactus/errors.hpp"

namespace cactus {

namespace {

BigInt from_int64(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "mpz_class needs a 64-bit long");
  return BigInt(static_cast<long>(v));
}

bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(from_int64(value)) {}

Rational::Rational(BigInt value) : value_(value) {}

Rational::Rational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(from_int64(numerator), from_int64(denominator)) {}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_decimal_integer(num)) throw Error("malformed rational: " + std::string(text));
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Rational(BigInt(num_str));
  const auto den = text.substr(slash + 1);
  if (!is_decimal_integer(den)) throw Error("malformed rational: " + std::string(text));
  std::string den_str(den.front() == '+' ? den.substr(1) : den);
  return Rational(BigInt(num_str), BigInt(den_str));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // cmp() cross-multiplies the big-integer parts; no rounding anywhere.
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t Rational::hash() const {
  const std::hash<std::string> h;
  return h(value_.get_num().get_str(16)) * 31 + h(value_.get_den().get_str(16));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace cactus
