#include "fqv/harmonic.hpp"

#include <algorithm>
#include <string>

#include "fqv/errors.hpp"

namespace fqv {

namespace {

void require_j_in_range(int n, int j) {
  if (j < 1 || j > n) {
    throw DomainError("need 1 <= j <= n, got n=" + std::to_string(n) +
                      ", j=" + std::to_string(j));
  }
}

}  // namespace

HarmonicTable::HarmonicTable(int max_n, int max_r)
    : max_n_(max_n), max_r_(max_r) {
  if (max_n < 0 || max_r < 1) throw DomainError("bad harmonic table bounds");
  values_.resize(static_cast<std::size_t>(max_r));
  for (int r = 1; r <= max_r; ++r) {
    auto& row = values_[r - 1];
    row.resize(static_cast<std::size_t>(max_n) + 1);
    for (int k = 1; k <= max_n; ++k) {
      row[k] = row[k - 1] + Rational(BigInt(1), ipow(BigInt(k), r));
    }
  }
}

const Rational& HarmonicTable::at(int k, int r) const {
  if (k < 0 || k > max_n_ || r < 1 || r > max_r_) {
    throw DomainError("harmonic table lookup out of range: k=" +
                      std::to_string(k) + ", r=" + std::to_string(r));
  }
  return values_[r - 1][k];
}

Rational HarmonicTable::diff(int n, int j, int t) const {
  return at(n, t) - at(n - j, t);
}

StirlingTable::StirlingTable(int max_n) : max_n_(max_n) {
  if (max_n < 0) throw DomainError("bad Stirling table bound");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  rows_[0] = {BigInt(1)};
  for (int n = 0; n < max_n; ++n) {
    auto& next = rows_[n + 1];
    next.assign(static_cast<std::size_t>(n) + 2, BigInt(0));
    for (int k = 1; k <= n + 1; ++k) {
      next[k] = (k <= n ? BigInt(rows_[n][k] * n) : BigInt(0)) + rows_[n][k - 1];
    }
  }
}

BigInt StirlingTable::at(int n, int k) const {
  if (n < 0 || n > max_n_) throw DomainError("Stirling lookup beyond table");
  if (k < 0 || k > n) return 0;
  return rows_[n][k];
}

Rational harmonic(int n, int r) {
  if (n < 0 || r < 1) throw DomainError("harmonic needs n >= 0, r >= 1");
  Rational s;
  for (int i = 1; i <= n; ++i) s += Rational(BigInt(1), ipow(BigInt(i), r));
  return s;
}

BigInt stirling1(int n, int k) {
  if (n < 0) throw DomainError("stirling1 with negative n");
  return StirlingTable(n).at(n, k);
}

Rational triple_harmonic_sum(int n) {
  if (n < 3) throw DomainError("triple harmonic sum needs n >= 3");
  // Scale every term by L^3, L = lcm(1..n), so the enumeration stays in
  // integers: L^3/(i1 i2 i3) = (L/i1)(L/i2)(L/i3).
  BigInt lcm = 1;
  for (int i = 2; i <= n; ++i) {
    mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(i));
  }
  std::vector<BigInt> w(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) w[i] = lcm / i;

  BigInt total = 0;
  BigInt inner;
  BigInt pair;
  for (int i1 = 1; i1 <= n; ++i1) {
    for (int i2 = i1 + 1; i2 <= n; ++i2) {
      inner = 0;
      for (int i3 = i2 + 1; i3 <= n; ++i3) inner += w[i3];
      pair = w[i1] * w[i2];
      mpz_addmul(total.get_mpz_t(), pair.get_mpz_t(), inner.get_mpz_t());
    }
  }
  return Rational(total, ipow(lcm, 3));
}

int Partition::weight() const {
  int s = 0;
  for (std::size_t t = 0; t < multiplicities.size(); ++t) {
    s += static_cast<int>(t + 1) * multiplicities[t];
  }
  return s;
}

namespace {

// Fill multiplicities for parts t, t-1, ..., 1 with `left` still to cover.
void enumerate(int t, int left, std::vector<int>& mult,
               std::vector<Partition>& out) {
  if (t == 0) {
    if (left == 0) out.push_back(Partition{mult});
    return;
  }
  for (int i = 0; i * t <= left; ++i) {
    mult[t - 1] = i;
    enumerate(t - 1, left - i * t, mult, out);
  }
  mult[t - 1] = 0;
}

}  // namespace

std::vector<Partition> partitions(int r) {
  if (r < 1) throw DomainError("partitions need r >= 1");
  std::vector<int> mult(static_cast<std::size_t>(r), 0);
  std::vector<Partition> out;
  enumerate(r, r, mult, out);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt partition_count(int r) {
  if (r < 0) throw DomainError("partition_count of negative integer");
  std::vector<BigInt> p(static_cast<std::size_t>(r) + 1, BigInt(0));
  p[0] = 1;
  for (int m = 1; m <= r; ++m) {
    BigInt s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const bool plus = (k % 2) == 1;
      if (plus) {
        s += p[m - g1];
      } else {
        s -= p[m - g1];
      }
      if (g2 <= m) {
        if (plus) {
          s += p[m - g2];
        } else {
          s -= p[m - g2];
        }
      }
    }
    p[m] = s;
  }
  return p[r];
}

Rational hdiff_partition_form(int r, int n, int j, const HarmonicTable& h) {
  if (r < 0) throw DomainError("partition form needs r >= 0");
  require_j_in_range(n, j);
  if (r == 0) return Rational(1);
  std::vector<Rational> scaled(static_cast<std::size_t>(r));
  for (int t = 1; t <= r; ++t) scaled[t - 1] = h.diff(n, j, t) / Rational(t);

  Rational total;
  for (const auto& part : partitions(r)) {
    Rational term(1);
    for (int t = 1; t <= r; ++t) {
      const int i = part.multiplicities[t - 1];
      if (i == 0) continue;
      term *= scaled[t - 1].pow(static_cast<unsigned>(i)) /
              Rational(factorial(i));
    }
    total += term;
  }
  return total;
}

Rational hdiff_partition_form(int r, int n, int j) {
  require_j_in_range(n, j);
  return hdiff_partition_form(r, n, j, HarmonicTable(n, std::max(r, 1)));
}

Rational lower_hessenberg_determinant(const RationalMatrix& m) {
  const std::size_t size = m.size();
  for (const auto& row : m) {
    if (row.size() != size) throw DomainError("matrix is not square");
  }
  // minors[k] = det of the leading k x k block. Expanding the last row of a
  // lower-Hessenberg block:
  //   D_k = sum_{i=1}^{k} (-1)^{k-i} m[k][i] (prod_{t=i}^{k-1} m[t][t+1]) D_{i-1}
  std::vector<Rational> minors(size + 1);
  minors[0] = Rational(1);
  for (std::size_t k = 1; k <= size; ++k) {
    Rational acc;
    Rational chain(1);  // product of superdiagonal entries i..k-1
    for (std::size_t i = k; i >= 1; --i) {
      Rational term = m[k - 1][i - 1] * chain * minors[i - 1];
      if ((k - i) % 2 == 1) term = -term;
      acc += term;
      if (i >= 2) chain *= m[i - 2][i - 1];
    }
    minors[k] = acc;
  }
  return minors[size];
}

Rational hdiff_determinant_form(int r, int n, int j, const HarmonicTable& h) {
  if (r < 0) throw DomainError("determinant form needs r >= 0");
  require_j_in_range(n, j);
  if (r == 0) return Rational(1);
  RationalMatrix m(static_cast<std::size_t>(r),
                   std::vector<Rational>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k <= i; ++k) m[i][k] = h.diff(n, j, i - k + 1);
    if (i + 1 < r) m[i][i + 1] = Rational(-(i + 1));
  }
  return lower_hessenberg_determinant(m) / Rational(factorial(r));
}

Rational hdiff_determinant_form(int r, int n, int j) {
  require_j_in_range(n, j);
  return hdiff_determinant_form(r, n, j, HarmonicTable(n, std::max(r, 1)));
}

}  // namespace fqv
