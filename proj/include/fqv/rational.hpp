#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace fqv {

using BigInt = mpz_class;

BigInt to_bigint(std::int64_t v);

/// Exact fraction num/den with gcd(|num|, den) = 1 and den >= 1.
/// Zero is 0/1. Every operation returns a canonical value.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T n) : v_(to_bigint(static_cast<std::int64_t>(n))) {}  // NOLINT
  Rational(const BigInt& n) : v_(n) {}                             // NOLINT
  Rational(const BigInt& num, const BigInt& den);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational inverse() const;
  Rational pow(unsigned e) const;
  double to_double() const { return v_.get_d(); }

  /// "a/b", or "a" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

/// C(n, k); zero when k < 0 or k > n. n must be nonnegative.
BigInt binomial(std::int64_t n, std::int64_t k);

/// n (n-1) ... (n-j+1), with (n)_0 = 1.
BigInt falling_factorial(std::int64_t n, std::int64_t j);

BigInt factorial(std::int64_t n);

BigInt ipow(const BigInt& base, unsigned long e);

}  // namespace fqv
