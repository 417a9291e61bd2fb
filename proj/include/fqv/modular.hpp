#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "fqv/rational.hpp"

namespace fqv {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 e, u64 m);

/// Signed integer reduced into [0, m).
u64 to_residue(std::int64_t a, u64 m);

/// Element of Z/mZ, tagged with its modulus. Arithmetic between residues of
/// different moduli throws ModulusMismatch.
class Residue {
 public:
  /// Reduces value mod modulus; modulus must be >= 2.
  Residue(u64 value, u64 modulus);
  static Residue from_signed(std::int64_t value, u64 modulus);

  u64 value() const { return value_; }
  u64 modulus() const { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator/(const Residue& o) const;
  Residue operator-() const;
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }

  Residue pow(u64 e) const;
  Residue inverse() const;

  friend bool operator==(const Residue&, const Residue&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Residue& r) {
    return os << r.value_;
  }

 private:
  void require_same(const Residue& o) const;

  u64 value_;
  u64 modulus_;
};

/// x in [0, m) with a x = 1 (mod m). Throws NotInvertible carrying gcd(a, m).
u64 mod_inverse(std::int64_t a, u64 m);

/// Inverses of every entry of `values` mod m via one inversion and prefix
/// products. Throws NotInvertible naming the first non-unit entry.
std::vector<u64> batch_inverse(std::span<const u64> values, u64 m);

/// num * den^{-1} mod m.
Residue reduce_mod(const Rational& x, u64 m);

bool residues_congruent(const Rational& x, const Rational& y, u64 m);

}  // namespace fqv
