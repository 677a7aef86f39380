#include "pqs/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace pqs {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(v_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(v_); }

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::domain_error("rational " + to_string() + " is not an integer");
  BigInt n = numerator();
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw std::domain_error("integer " + to_string() + " out of int64 range");
  return static_cast<std::int64_t>(n);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  std::string s = numerator().str();
  if (!is_integer()) s += "/" + denominator().str();
  return s;
}

namespace {

BigInt parse_int(std::string_view s, std::string_view whole) {
  std::size_t k = 0;
  bool neg = false;
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) neg = s[k++] == '-';
  if (k == s.size()) throw std::invalid_argument("bad rational literal '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("bad rational literal '" + std::string(whole) + "'");
    v = v * 10 + (s[k] - '0');
  }
  return neg ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  BigInt num = parse_int(trim(s.substr(0, slash)), text);
  BigInt den = parse_int(trim(s.substr(slash + 1)), text);
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace pqs
