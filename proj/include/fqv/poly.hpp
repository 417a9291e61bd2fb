#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fqv/rational.hpp"

namespace fqv {

/// Dense univariate polynomial over Rational. coeffs()[i] multiplies the
/// i-th power; the highest stored coefficient is nonzero and the zero
/// polynomial stores nothing. The variable name only affects rendering.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coeffs, char var = 'x');
  static DensePoly constant(const Rational& c, char var = 'x');
  /// c * var^k
  static DensePoly monomial(const Rational& c, std::size_t k, char var = 'x');

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  char var() const { return var_; }
  DensePoly with_var(char v) const;

  /// i-th coefficient, zero beyond the degree.
  Rational coefficient(std::size_t i) const;

  Rational evaluate(const Rational& t) const;

  /// Canonical "c0 + c1*x + c2*x^2" over nonzero terms; "0" when zero.
  std::string str() const;

  DensePoly& operator+=(const DensePoly& o);
  DensePoly& operator-=(const DensePoly& o);
  DensePoly& operator*=(const Rational& c);
  DensePoly operator-() const;

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator*(DensePoly a, const Rational& c) { return a *= c; }
  friend DensePoly operator*(const Rational& c, DensePoly a) { return a *= c; }

  /// Coefficient-sequence equality; the variable name is ignored.
  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  std::vector<Rational> coeffs_;
  char var_ = 'x';
};

inline DensePoly poly_add(const DensePoly& p, const DensePoly& q) { return p + q; }
inline DensePoly poly_mul(const DensePoly& p, const DensePoly& q) { return p * q; }
inline DensePoly poly_scale(const DensePoly& p, const Rational& c) { return p * c; }
inline bool poly_equal(const DensePoly& p, const DensePoly& q) { return p == q; }

/// (var + c)^k, expanded with the binomial theorem.
DensePoly shifted_power(const Rational& c, unsigned k, char var = 'x');

/// (a + b var)^k.
DensePoly linear_power(const Rational& a, const Rational& b, unsigned k,
                       char var = 'x');

}  // namespace fqv
