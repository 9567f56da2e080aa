#include "sadic/rational.hpp"

#include <limits>
#include <ostream>

#include "sadic/error.hpp"

namespace sadic {

Rational::Rational(long num, long den) {
  if (den == 0) throw RangeError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view num, std::string_view den) {
  mpz_class n, d;
  if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0)
    throw RangeError("malformed rational '" + std::string(num) + "/" + std::string(den) + "'");
  if (d == 0) throw RangeError("rational with zero denominator");
  return Rational(mpq_class(n, d));
}

Rational Rational::power(long base, long exponent) {
  if (base == 0 && exponent < 0) throw RangeError("zero to a negative power");
  mpz_class p;
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                       : static_cast<unsigned long>(exponent);
  mpz_class b(base);
  mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), e);
  if (exponent < 0) return Rational(mpq_class(mpz_class(1), p));
  return Rational(mpq_class(p));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw RangeError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::size_t Rational::denominator_bits() const {
  return mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::int64_t Rational::floor_int64() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  if (!f.fits_slong_p()) throw RangeError("floor does not fit in 64 bits");
  return f.get_si();
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return numerator();
  return numerator() + "/" + denominator();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sadic
