#include "tuza/rational.hpp"

#include <stdexcept>

namespace tuza {

Rational::Rational(long long value) {
  mpz_class z;
  // mpz_class has no long long constructor on every platform.
  z = std::to_string(value);
  value_ = mpq_class(z);
}

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  mpz_class num;
  mpz_class den;
  num = std::to_string(numerator);
  den = std::to_string(denominator);
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  try {
    if (slash == std::string::npos) {
      num = s;
    } else {
      num = s.substr(0, slash);
      den = s.substr(slash + 1);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(mpq_class(num, den));
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
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::numerator_str() const { return value_.get_num().get_str(); }
std::string Rational::denominator_str() const { return value_.get_den().get_str(); }
std::string Rational::str() const { return numerator_str() + "/" + denominator_str(); }

namespace {

long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("Rational: integer part out of range");
  return z.get_si();
}

}  // namespace

long long Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return to_ll(q);
}

long long Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return to_ll(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool at_least_minus_sqrt(const Rational& lhs, const Rational& coeff, const Rational& arg,
                         const Rational& rhs) {
  if (coeff.sign() < 0 || arg.sign() < 0)
    throw std::domain_error("at_least_minus_sqrt: negative coefficient or radicand");
  // lhs - c*sqrt(a) >= rhs  <=>  lhs - rhs >= c*sqrt(a)
  Rational diff = lhs - rhs;
  if (diff.sign() < 0) return false;
  return diff * diff >= coeff * coeff * arg;
}

bool at_least_plus_sqrt(const Rational& value, const Rational& base, const Rational& coeff,
                        const Rational& arg) {
  if (coeff.sign() < 0 || arg.sign() < 0)
    throw std::domain_error("at_least_plus_sqrt: negative coefficient or radicand");
  Rational diff = value - base;
  if (diff.sign() < 0) return false;
  return diff * diff >= coeff * coeff * arg;
}

}  // namespace tuza
