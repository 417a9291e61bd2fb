#include "fqv/poly.hpp"

#include <algorithm>

namespace fqv {

DensePoly::DensePoly(std::vector<Rational> coeffs, char var)
    : coeffs_(std::move(coeffs)), var_(var) {
  normalize();
}

DensePoly DensePoly::constant(const Rational& c, char var) {
  return DensePoly({c}, var);
}

DensePoly DensePoly::monomial(const Rational& c, std::size_t k, char var) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return DensePoly(std::move(v), var);
}

DensePoly DensePoly::with_var(char v) const {
  DensePoly p = *this;
  p.var_ = v;
  return p;
}

void DensePoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational DensePoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational{};
}

Rational DensePoly::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

std::string DensePoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[i].str();
    if (i >= 1) (out += '*') += var_;
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

DensePoly& DensePoly::operator+=(const DensePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

DensePoly& DensePoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

DensePoly DensePoly::operator-() const {
  DensePoly p = *this;
  for (auto& a : p.coeffs_) a = -a;
  return p;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return DensePoly({}, a.var_);
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return DensePoly(std::move(out), a.var_);
}

DensePoly linear_power(const Rational& a, const Rational& b, unsigned k,
                       char var) {
  // sum_i C(k,i) a^{k-i} b^i var^i
  std::vector<Rational> v(k + 1);
  for (unsigned i = 0; i <= k; ++i) {
    v[i] = Rational(binomial(k, i)) * a.pow(k - i) * b.pow(i);
  }
  return DensePoly(std::move(v), var);
}

DensePoly shifted_power(const Rational& c, unsigned k, char var) {
  return linear_power(c, Rational(1), k, var);
}

}  // namespace fqv
