#include "fqv/rational.hpp"

#include "fqv/errors.hpp"

namespace fqv {

BigInt to_bigint(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t),
                "LP64 platform expected for GMP long conversions");
  return BigInt(static_cast<long>(v));
}

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::pow(unsigned e) const {
  Rational r;
  mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  // Powers of coprime integers stay coprime; no canonicalize needed.
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binomial with negative n");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt falling_factorial(std::int64_t n, std::int64_t j) {
  if (j < 0) throw DomainError("falling factorial with negative length");
  BigInt r = 1;
  for (std::int64_t i = 0; i < j; ++i) {
    r *= to_bigint(n - i);
    if (r == 0) break;
  }
  return r;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace fqv
