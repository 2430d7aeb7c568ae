#pragma once

// Exact scalars used throughout the library: arbitrary-precision rationals and
// square roots of non-negative rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace coarse {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "7", "-3", "p/q" or a terminating decimal such as "0.25".
Rational parse_rational(std::string_view text);

/// Integer when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

Rational pow2(int exponent);

/// Exact rational square root when one exists.
bool rational_sqrt(const Rational& value, Rational& root);

/// The non-negative real number sqrt(square) for a rational square >= 0.
///
/// Closed under multiplication and division by rationals and by other surds,
/// which is all the Lipschitz fits need. Sums are not closed; use
/// `sum_at_least` for triangle inequalities.
class Surd {
 public:
  Surd() = default;
  /// The surd equal to a non-negative rational.
  explicit Surd(const Rational& value);
  explicit Surd(std::int64_t value) : Surd(Rational(value)) {}

  static Surd root(const Rational& square);

  const Rational& square() const { return square_; }
  bool is_zero() const { return square_ == 0; }
  bool is_rational() const;
  Rational to_rational() const;  // throws if irrational

  friend bool operator==(const Surd& a, const Surd& b) { return a.square_ == b.square_; }
  friend std::strong_ordering operator<=>(const Surd& a, const Surd& b);

  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const Surd& b);
  friend Surd operator*(const Surd& a, const Rational& r);
  friend Surd operator/(const Surd& a, const Rational& r);

 private:
  Rational square_{0};
};

/// a + b >= c, decided exactly.
bool sum_at_least(const Surd& a, const Surd& b, const Surd& c);
inline bool sum_at_least(const Rational& a, const Rational& b, const Rational& c) { return a + b >= c; }
inline bool sum_at_least(std::int64_t a, std::int64_t b, std::int64_t c) { return a + b >= c; }

/// "sqrt(p/q)" unless the value is rational.
std::string format_surd(const Surd& value);
Surd parse_surd(std::string_view text);

inline std::string format_scalar(const Rational& v) { return format_rational(v); }
inline std::string format_scalar(const Surd& v) { return format_surd(v); }
inline std::string format_scalar(std::int64_t v) { return std::to_string(v); }

inline Rational to_rational(std::int64_t v) { return Rational(v); }
inline const Rational& to_rational(const Rational& v) { return v; }

}  // namespace coarse
