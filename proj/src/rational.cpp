#include "coarse/rational.hpp"

#include <stdexcept>

namespace coarse {

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed number: " + std::string(text));
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed number: " + std::string(text));
    }
  }
  BigInt value(std::string(text.substr(start)));
  return text[0] == '-' ? BigInt(-value) : value;
}

bool integer_sqrt(const BigInt& value, BigInt& root) {
  if (value < 0) return false;
  root = boost::multiprecision::sqrt(value);
  return root * root == value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    digits += frac;
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational(parse_integer(digits), den);
  }
  return Rational(parse_integer(text));
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational pow2(int exponent) {
  BigInt p = 1;
  p <<= (exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(BigInt(1), p) : Rational(p);
}

bool rational_sqrt(const Rational& value, Rational& root) {
  BigInt n, d;
  if (!integer_sqrt(numerator(value), n) || !integer_sqrt(denominator(value), d)) return false;
  root = Rational(n, d);
  return true;
}

Surd::Surd(const Rational& value) : square_(value * value) {
  if (value < 0) throw std::invalid_argument("surd of a negative value");
}

Surd Surd::root(const Rational& square) {
  if (square < 0) throw std::invalid_argument("square root of a negative value");
  Surd s;
  s.square_ = square;
  return s;
}

bool Surd::is_rational() const {
  Rational r;
  return rational_sqrt(square_, r);
}

Rational Surd::to_rational() const {
  Rational r;
  if (!rational_sqrt(square_, r)) throw std::domain_error("irrational surd " + format_surd(*this));
  return r;
}

std::strong_ordering operator<=>(const Surd& a, const Surd& b) {
  if (a.square_ < b.square_) return std::strong_ordering::less;
  if (b.square_ < a.square_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Surd operator*(const Surd& a, const Surd& b) { return Surd::root(a.square_ * b.square_); }
Surd operator/(const Surd& a, const Surd& b) { return Surd::root(a.square_ / b.square_); }
Surd operator*(const Surd& a, const Rational& r) { return Surd::root(a.square_ * r * r); }
Surd operator/(const Surd& a, const Rational& r) { return Surd::root(a.square_ / (r * r)); }

bool sum_at_least(const Surd& a, const Surd& b, const Surd& c) {
  // (a+b)^2 >= c^2  <=>  2ab >= C - A - B with A,B,C the squares.
  Rational slack = c.square() - a.square() - b.square();
  if (slack <= 0) return true;
  return 4 * a.square() * b.square() >= slack * slack;
}

std::string format_surd(const Surd& value) {
  Rational r;
  if (rational_sqrt(value.square(), r)) return format_rational(r);
  return "sqrt(" + format_rational(value.square()) + ")";
}

Surd parse_surd(std::string_view text) {
  constexpr std::string_view prefix = "sqrt(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    return Surd::root(parse_rational(text.substr(prefix.size(), text.size() - prefix.size() - 1)));
  }
  return Surd(parse_rational(text));
}

}  // namespace coarse
