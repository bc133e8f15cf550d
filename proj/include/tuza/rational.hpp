#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tuza {

// Exact fraction, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long numerator, long long denominator);

  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  std::string numerator_str() const;
  std::string denominator_str() const;
  // Always "p/q", including integers ("2/1").
  std::string str() const;

  // Exact floor/ceil; throws std::overflow_error if the result does not fit.
  long long floor() const;
  long long ceil() const;
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v);
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// True iff lhs - coeff * sqrt(arg) >= rhs, decided exactly by squaring.
// Requires coeff >= 0 and arg >= 0.
bool at_least_minus_sqrt(const Rational& lhs, const Rational& coeff, const Rational& arg,
                         const Rational& rhs);

// True iff value <= base - coeff * sqrt(arg), decided exactly.
inline bool at_most_minus_sqrt(const Rational& value, const Rational& base, const Rational& coeff,
                               const Rational& arg) {
  return at_least_minus_sqrt(base, coeff, arg, value);
}

// True iff value >= base + coeff * sqrt(arg), decided exactly.
bool at_least_plus_sqrt(const Rational& value, const Rational& base, const Rational& coeff,
                        const Rational& arg);

}  // namespace tuza
