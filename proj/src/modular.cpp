#include "fqv/modular.hpp"

#include <numeric>
#include <string>

#include "fqv/errors.hpp"

namespace fqv {

namespace {

constexpr u64 kSmallModulus = u64{1} << 32;

void require_modulus(u64 m) {
  if (m < 2) throw DomainError("modulus must be >= 2");
}

// Extended Euclid on (a, m) with a already in [0, m).
u64 invert_reduced(u64 a, u64 m, const std::string& shown) {
  __int128 old_r = a, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    const u64 g = static_cast<u64>(old_r);
    throw NotInvertible(g, shown + " is not invertible mod " +
                               std::to_string(m) +
                               " (gcd=" + std::to_string(g) + ")");
  }
  __int128 x = old_s % static_cast<__int128>(m);
  if (x < 0) x += m;
  return static_cast<u64>(x);
}

}  // namespace

u64 mulmod(u64 a, u64 b, u64 m) {
  if (m <= kSmallModulus) return (a % m) * (b % m) % m;
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

u64 to_residue(std::int64_t a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  // -(a+1) avoids overflow at INT64_MIN.
  const u64 neg = (static_cast<u64>(-(a + 1)) % m + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

Residue::Residue(u64 value, u64 modulus) : value_(0), modulus_(modulus) {
  require_modulus(modulus);
  value_ = value % modulus;
}

Residue Residue::from_signed(std::int64_t value, u64 modulus) {
  require_modulus(modulus);
  return Residue(to_residue(value, modulus), modulus);
}

void Residue::require_same(const Residue& o) const {
  if (modulus_ != o.modulus_) {
    throw ModulusMismatch("residue arithmetic mod " + std::to_string(modulus_) +
                          " with residue mod " + std::to_string(o.modulus_));
  }
}

Residue Residue::operator+(const Residue& o) const {
  require_same(o);
  const u64 s = value_ + o.value_;
  // value_ < m and o.value_ < m, so s < 2m; guard wraparound for m > 2^63.
  const bool wrapped = s < value_;
  return Residue(wrapped || s >= modulus_ ? s - modulus_ : s, modulus_);
}

Residue Residue::operator-(const Residue& o) const {
  require_same(o);
  return Residue(value_ >= o.value_ ? value_ - o.value_
                                    : modulus_ - (o.value_ - value_),
                 modulus_);
}

Residue Residue::operator*(const Residue& o) const {
  require_same(o);
  return Residue(mulmod(value_, o.value_, modulus_), modulus_);
}

Residue Residue::operator/(const Residue& o) const {
  require_same(o);
  return *this * o.inverse();
}

Residue Residue::operator-() const {
  return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Residue Residue::pow(u64 e) const {
  return Residue(powmod(value_, e, modulus_), modulus_);
}

Residue Residue::inverse() const {
  return Residue(invert_reduced(value_, modulus_, std::to_string(value_)),
                 modulus_);
}

u64 mod_inverse(std::int64_t a, u64 m) {
  require_modulus(m);
  return invert_reduced(to_residue(a, m), m, std::to_string(a));
}

std::vector<u64> batch_inverse(std::span<const u64> values, u64 m) {
  require_modulus(m);
  const std::size_t n = values.size();
  std::vector<u64> prefix(n);
  u64 acc = 1 % m;
  for (std::size_t i = 0; i < n; ++i) {
    acc = mulmod(acc, values[i] % m, m);
    prefix[i] = acc;
  }
  if (n == 0) return {};
  if (std::gcd(acc, m) != 1) {
    for (u64 v : values) invert_reduced(v % m, m, std::to_string(v));
  }
  u64 inv = invert_reduced(acc, m, std::to_string(acc));
  std::vector<u64> out(n);
  for (std::size_t i = n; i-- > 1;) {
    out[i] = mulmod(inv, prefix[i - 1], m);
    inv = mulmod(inv, values[i] % m, m);
  }
  out[0] = inv;
  return out;
}

Residue reduce_mod(const Rational& x, u64 m) {
  require_modulus(m);
  const BigInt num = x.num();
  const BigInt den = x.den();
  const u64 n = mpz_fdiv_ui(num.get_mpz_t(), m);
  const u64 d = mpz_fdiv_ui(den.get_mpz_t(), m);
  u64 dinv;
  try {
    dinv = invert_reduced(d, m, std::to_string(d));
  } catch (const NotInvertible& e) {
    throw NotInvertible(e.gcd(), "denominator " + den.get_str() +
                                     " not invertible mod " +
                                     std::to_string(m));
  }
  return Residue(mulmod(n, dinv, m), m);
}

bool residues_congruent(const Rational& x, const Rational& y, u64 m) {
  return reduce_mod(x, m) == reduce_mod(y, m);
}

}  // namespace fqv
