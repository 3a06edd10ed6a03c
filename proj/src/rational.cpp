#include "tribsum/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "tribsum/error.hpp"

namespace tribsum {

namespace {

bool is_decimal_integer(std::string_view text, bool allow_sign) {
  if (allow_sign && !text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt to_bigint(std::string_view digits) {
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  return BigInt(std::string(digits), 10);
}

}  // namespace

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP long constructors assume LP64");

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(BigInt(static_cast<long>(numerator)), BigInt(static_cast<long>(denominator))) {}

Rational::Rational(const BigInt& integer) : value_(integer) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal_integer(text, true)) {
      throw MalformedRational("malformed rational literal '" + std::string(text) +
                              "' (expected p or p/q)");
    }
    return Rational(to_bigint(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_decimal_integer(num, true) || !is_decimal_integer(den, false)) {
    throw MalformedRational("malformed rational literal '" + std::string(text) +
                            "' (expected p or p/q)");
  }
  const BigInt d = to_bigint(den);
  if (d == 0) throw MalformedRational("zero denominator in '" + std::string(text) + "'");
  return Rational(to_bigint(num), d);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
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
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace tribsum
