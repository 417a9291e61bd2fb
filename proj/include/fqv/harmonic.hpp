#pragma once

#include <cstdint>
#include <vector>

#include "fqv/rational.hpp"

namespace fqv {

/// H_k^{(r)} = sum_{i<=k} 1/i^r for 0 <= k <= max_n, 1 <= r <= max_r.
/// Built once; read-only afterwards, so concurrent lookups are safe.
class HarmonicTable {
 public:
  HarmonicTable(int max_n, int max_r);

  int max_n() const { return max_n_; }
  int max_r() const { return max_r_; }

  const Rational& at(int k, int r) const;
  /// H_n^{(t)} - H_{n-j}^{(t)}
  Rational diff(int n, int j, int t) const;

 private:
  int max_n_;
  int max_r_;
  std::vector<std::vector<Rational>> values_;  // [r-1][k]
};

/// Unsigned Stirling numbers of the first kind, stf(n, k) for k <= n <= max_n,
/// via stf(n+1, k) = n stf(n, k) + stf(n, k-1).
class StirlingTable {
 public:
  explicit StirlingTable(int max_n);

  int max_n() const { return max_n_; }
  /// Zero outside 0 <= k <= n.
  BigInt at(int n, int k) const;

 private:
  int max_n_;
  std::vector<std::vector<BigInt>> rows_;
};

Rational harmonic(int n, int r);
BigInt stirling1(int n, int k);

/// sum over 1 <= i1 < i2 < i3 <= n of 1/(i1 i2 i3), by direct enumeration.
Rational triple_harmonic_sum(int n);

/// Multiplicity form of a partition of r: multiplicities[t-1] = i_t, so that
/// sum_t t * i_t = r.
struct Partition {
  std::vector<int> multiplicities;
  int weight() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of r >= 1, ordered lexicographically by multiplicity tuple.
std::vector<Partition> partitions(int r);

/// p(r) from Euler's pentagonal-number recurrence.
BigInt partition_count(int r);

/// sum over partitions of r of prod_t (1/i_t!) ((H_n^{(t)} - H_{n-j}^{(t)})/t)^{i_t}.
/// r = 0 gives the empty product 1.
Rational hdiff_partition_form(int r, int n, int j, const HarmonicTable& h);
Rational hdiff_partition_form(int r, int n, int j);

/// (1/r!) det of the r x r lower-Hessenberg matrix whose (i, k) entry is
/// H_n^{(i-k+1)} - H_{n-j}^{(i-k+1)} for k <= i and whose superdiagonal is
/// -1, -2, ..., -(r-1).
Rational hdiff_determinant_form(int r, int n, int j, const HarmonicTable& h);
Rational hdiff_determinant_form(int r, int n, int j);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Determinant of a square lower-Hessenberg matrix (zero above the first
/// superdiagonal) by the leading-minor recurrence. Division free.
Rational lower_hessenberg_determinant(const RationalMatrix& m);

}  // namespace fqv
