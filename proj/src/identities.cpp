#include "fqv/identities.hpp"

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

Rational frac(std::int64_t a, std::int64_t b) {
  return Rational(to_bigint(a), to_bigint(b));
}

Rational sign_pow(long e) { return Rational(e % 2 == 0 ? 1 : -1); }

// dsum without the range check; j = 0 is the empty sum.
Rational dsum_raw(int r, int n, int j) {
  Rational s;
  for (int l = 0; l <= j - 1; ++l) {
    const BigInt c = binomial(n - l - 1, n - j) * binomial(n, l);
    Rational term(c, ipow(BigInt(n - l), static_cast<unsigned long>(r - 1)));
    if ((j - l - 1) % 2 == 1) term = -term;
    s += term;
  }
  return s;
}

// sum_{l<j} (-1)^{j-l-1} C(j-1,l) / (n-l)^e
Rational alternating_reciprocal_sum(int n, int j, int e) {
  Rational s;
  for (int l = 0; l <= j - 1; ++l) {
    Rational term(binomial(j - 1, l), ipow(BigInt(n - l), static_cast<unsigned long>(e)));
    if ((j - l - 1) % 2 == 1) term = -term;
    s += term;
  }
  return s;
}

Params nj(int n, int j) { return {{"n", n}, {"j", j}}; }
Params rnj(int r, int n, int j) { return {{"r", r}, {"n", n}, {"j", j}}; }

using T = ClosedFormTerm;

// Exponent vectors are indexed by harmonic order 1..6. The order-5 entry for
// the squared second-order difference is 1/8 and the lone fourth-order
// difference 1/4; the sum over partitions of 4 fixes both values.
const std::vector<std::vector<ClosedFormTerm>>& closed_forms() {
  static const std::vector<std::vector<ClosedFormTerm>> forms = [] {
    std::vector<std::vector<ClosedFormTerm>> f(8);
    f[1] = {T{frac(1, 1), {0, 0, 0, 0, 0, 0}}};
    f[2] = {T{frac(1, 1), {1, 0, 0, 0, 0, 0}}};
    f[3] = {T{frac(1, 2), {2, 0, 0, 0, 0, 0}},
            T{frac(1, 2), {0, 1, 0, 0, 0, 0}}};
    f[4] = {T{frac(1, 6), {3, 0, 0, 0, 0, 0}},
            T{frac(1, 2), {1, 1, 0, 0, 0, 0}},
            T{frac(1, 3), {0, 0, 1, 0, 0, 0}}};
    f[5] = {T{frac(1, 24), {4, 0, 0, 0, 0, 0}},
            T{frac(1, 4), {2, 1, 0, 0, 0, 0}},
            T{frac(1, 3), {1, 0, 1, 0, 0, 0}},
            T{frac(1, 8), {0, 2, 0, 0, 0, 0}},
            T{frac(1, 4), {0, 0, 0, 1, 0, 0}}};
    f[6] = {T{frac(1, 120), {5, 0, 0, 0, 0, 0}},
            T{frac(1, 12), {3, 1, 0, 0, 0, 0}},
            T{frac(1, 6), {2, 0, 1, 0, 0, 0}},
            T{frac(1, 8), {1, 2, 0, 0, 0, 0}},
            T{frac(1, 4), {1, 0, 0, 1, 0, 0}},
            T{frac(1, 6), {0, 1, 1, 0, 0, 0}},
            T{frac(1, 5), {0, 0, 0, 0, 1, 0}}};
    f[7] = {T{frac(1, 720), {6, 0, 0, 0, 0, 0}},
            T{frac(1, 48), {4, 1, 0, 0, 0, 0}},
            T{frac(1, 18), {3, 0, 1, 0, 0, 0}},
            T{frac(1, 16), {2, 2, 0, 0, 0, 0}},
            T{frac(1, 8), {2, 0, 0, 1, 0, 0}},
            T{frac(1, 6), {1, 1, 1, 0, 0, 0}},
            T{frac(1, 5), {1, 0, 0, 0, 1, 0}},
            T{frac(1, 48), {0, 3, 0, 0, 0, 0}},
            T{frac(1, 8), {0, 1, 0, 1, 0, 0}},
            T{frac(1, 18), {0, 0, 2, 0, 0, 0}},
            T{frac(1, 6), {0, 0, 0, 0, 0, 1}}};
    return f;
  }();
  return forms;
}

}  // namespace

Rational dsum(int r, int n, int j) {
  if (r < 1) throw DomainError("dsum needs r >= 1");
  require_j_in_range(n, j);
  return dsum_raw(r, n, j);
}

std::span<const ClosedFormTerm> closed_form_terms(int r) {
  if (r < 1 || r > 7) throw DomainError("closed forms exist for 1 <= r <= 7");
  return closed_forms()[r];
}

Rational dsum_closed_form(int r, int n, int j, const HarmonicTable& h) {
  const auto terms = closed_form_terms(r);
  require_j_in_range(n, j);
  std::array<Rational, 6> d;
  for (int t = 1; t <= std::min(6, r - 1); ++t) d[t - 1] = h.diff(n, j, t);
  Rational total;
  for (const auto& term : terms) {
    Rational v = term.coeff;
    for (int t = 0; t < 6; ++t) {
      if (term.exponents[t] != 0) v *= d[t].pow(static_cast<unsigned>(term.exponents[t]));
    }
    total += v;
  }
  return total;
}

Rational dsum_closed_form(int r, int n, int j) {
  require_j_in_range(n, j);
  return dsum_closed_form(r, n, j, HarmonicTable(n, std::max(r - 1, 1)));
}

Rational harmonic_difference_stirling_form(int n, int j, const StirlingTable& s) {
  require_j_in_range(n, j);
  Rational total;
  for (int v = 0; v <= j - 1; ++v) {
    BigInt term = s.at(j, v + 1) * (v + 1) * ipow(BigInt(n), static_cast<unsigned long>(v));
    if ((j - v - 1) % 2 == 1) term = -term;
    total += Rational(term);
  }
  return total / Rational(falling_factorial(n, j));
}

Rational bsum(int n, int j) {
  require_j_in_range(n, j);
  Rational s;
  for (int l = 0; l <= j; ++l) {
    BigInt term = binomial(n - l, n - j) * binomial(n, l);
    if ((j - l) % 2 == 1) term = -term;
    s += Rational(term);
  }
  return s;
}

CheckReport bsum_vanishes(int n, int j) {
  return exact_report("bsum", nj(n, j), bsum(n, j), Rational(0));
}

std::vector<CheckReport> difference_recurrences(int n, int j, const HarmonicTable& h) {
  if (j < 2 || j > n) throw DomainError("difference recurrences need 2 <= j <= n");
  const Rational gap = frac(1, n - j + 1);  // 1/(n-j+1)
  const Rational hd = h.diff(n, j, 1);      // H_n - H_{n-j}

  const Rational c_step = dsum_raw(2, n, j) - dsum_raw(2, n, j - 1);
  const Rational d_step = dsum_raw(3, n, j) - dsum_raw(3, n, j - 1);
  const Rational d_prev_step = dsum_raw(3, n, j - 1) - dsum_raw(3, n, j - 2);
  const Rational fd_step = dsum_raw(4, n, j) - dsum_raw(4, n, j - 1);
  const Rational fd_prev_step = dsum_raw(4, n, j - 1) - dsum_raw(4, n, j - 2);

  // E(n,j) = (n-j+1)(D(n,j) - D(n,j-1)); same shape for the order-4 analogue.
  const Rational e_now = Rational(n - j + 1) * d_step;
  const Rational e_prev = Rational(n - j + 2) * d_prev_step;
  const Rational fe_now = Rational(n - j + 1) * fd_step;
  const Rational fe_prev = Rational(n - j + 2) * fd_prev_step;

  // H_n (H_n - H_{n-j}) - ((H_n^2 - H_n^{(2)})/2 - (H_{n-j}^2 - H_{n-j}^{(2)})/2)
  const Rational hn = h.at(n, 1);
  const Rational hm = h.at(n - j, 1);
  const Rational fe_closed =
      hn * hd - ((hn * hn - h.at(n, 2)) / Rational(2) -
                 (hm * hm - h.at(n - j, 2)) / Rational(2));

  const Rational rr44 =
      Rational(binomial(n, j - 1)) * alternating_reciprocal_sum(n, j, 2);

  return {
      exact_report("diffrec-C", nj(n, j), c_step, gap),
      exact_report("diffrec-D-binomial", nj(n, j), d_step, rr44),
      exact_report("diffrec-D", nj(n, j), d_step, hd * gap),
      exact_report("diffrec-E", nj(n, j), e_now - e_prev, gap),
      exact_report("diffrec-frakE", nj(n, j), fe_now - fe_prev, hd * gap),
      exact_report("diffrec-frakD", nj(n, j), fd_step, fe_closed * gap),
  };
}

std::vector<CheckReport> difference_base_cases(int n) {
  if (n < 1) throw DomainError("base cases need n >= 1");
  const Params params = {{"n", n}};
  const BigInt nn(n);
  return {
      exact_report("diffrec-D-base", params, dsum_raw(3, n, 1), Rational(BigInt(1), nn * nn)),
      exact_report("diffrec-frakD-base", params, dsum_raw(4, n, 1),
                   Rational(BigInt(1), nn * nn * nn)),
      exact_report("diffrec-frakE-base", params, Rational(n) * dsum_raw(4, n, 1),
                   Rational(BigInt(1), nn * nn)),
  };
}

CheckReport hypergeom_step(int n, int j) {
  require_j_in_range(n, j);
  const Rational lhs = alternating_reciprocal_sum(n, j, 1);
  const Rational rhs(factorial(j - 1) * factorial(n - j), factorial(n));
  return exact_report("hypergeom-step", nj(n, j), lhs, rhs);
}

DensePoly mneimneh_poly(int n, int r, MneimnehSide side, const HarmonicTable& h) {
  if (n < 1 || r < 1) throw DomainError("mneimneh polynomials need n, r >= 1");
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<Rational> c(size);

  if (side == MneimnehSide::lhs) {
    // H_k^{(r)} C(n,k) (1-q)^k q^{n-k} = H_k^{(r)} C(n,k) sum_i C(k,i) (-1)^i q^{n-k+i}
    for (int k = 1; k <= n; ++k) {
      const Rational w = h.at(k, r) * Rational(binomial(n, k));
      for (int i = 0; i <= k; ++i) {
        BigInt b = binomial(k, i);
        if (i % 2 == 1) b = -b;
        c[n - k + i] += w * Rational(b);
      }
    }
    return DensePoly(std::move(c), 'q');
  }

  c[0] = h.at(n, r);
  for (int j = 1; j <= n; ++j) {
    Rational coeff;
    switch (side) {
      case MneimnehSide::rhs_eq9:
        if (r != 1) throw DomainError("the order-1 form needs r = 1");
        coeff = frac(1, j);
        break;
      case MneimnehSide::rhs_eq100:
        coeff = Rational(binomial(n, j)) * alternating_reciprocal_sum(n, j, r);
        break;
      case MneimnehSide::rhs_eq101:
        coeff = dsum_raw(r, n, j) / Rational(j);
        break;
      case MneimnehSide::rhs_closed:
        if (r > 7) throw DomainError("closed forms exist for r <= 7");
        coeff = dsum_closed_form(r, n, j, h) / Rational(j);
        break;
      case MneimnehSide::lhs:
        break;
    }
    c[j] -= coeff;
  }
  return DensePoly(std::move(c), 'q');
}

DensePoly mneimneh_poly(int n, int r, MneimnehSide side) {
  if (n < 1 || r < 1) throw DomainError("mneimneh polynomials need n, r >= 1");
  return mneimneh_poly(n, r, side, HarmonicTable(n, std::max(r, 6)));
}

std::vector<CheckReport> check_mneimneh(int n, int r, const HarmonicTable& h) {
  const Params params = {{"n", n}, {"r", r}};
  const std::string lhs = mneimneh_poly(n, r, MneimnehSide::lhs, h).str();
  std::vector<CheckReport> out;
  auto add = [&](const char* family, MneimnehSide side) {
    out.push_back(exact_report(family, params, lhs, mneimneh_poly(n, r, side, h).str()));
  };
  if (r == 1) add("mneimneh-eq9", MneimnehSide::rhs_eq9);
  add("mneimneh-eq100", MneimnehSide::rhs_eq100);
  add("mneimneh-eq101", MneimnehSide::rhs_eq101);
  if (r <= 7) add("mneimneh-closed", MneimnehSide::rhs_closed);
  return out;
}

std::vector<CheckReport> check_lemma2(int n) {
  if (n < 1 || n % 2 == 0) throw DomainError("lemma2 needs odd n >= 1");
  DensePoly lhs;
  DensePoly rhs;
  Rational constant;
  for (int r = 1; r <= n; ++r) {
    const Rational inv_r = frac(1, r);
    lhs += DensePoly::monomial(sign_pow(r - 1) * inv_r, static_cast<std::size_t>(r));
    rhs += shifted_power(1, static_cast<unsigned>(r)) *
           (Rational(binomial(n, r)) * sign_pow(r - 1) * inv_r);
    constant += sign_pow(r) * inv_r * Rational(binomial(n, r));
  }
  rhs += DensePoly::constant(constant);
  const Params params = {{"n", n}};
  std::vector<CheckReport> out = {exact_report("lemma2", params, lhs.str(), rhs.str())};
  if (n < 3) return out;  // no x^2 or x^3 term to compare

  Rational x2;
  Rational x3(2);
  for (int r = 1; r <= n - 1; ++r) {
    const Rational b = Rational(binomial(n, r)) * sign_pow(r);
    x2 += b * Rational(r - 1);
    x3 += b * Rational(r - 1) * Rational(r - 2);
  }
  out.push_back(exact_report("lemma2-x2", params, Rational(n), x2));
  out.push_back(exact_report("lemma2-x3", params, Rational((n - 1) * (n - 2)), x3));
  return out;
}

std::vector<CheckReport> check_heartsuit(int n) {
  if (n < 1) throw DomainError("heartsuit needs n >= 1");
  const DensePoly one_minus_x({Rational(1), Rational(-1)});
  const DensePoly x_minus_one({Rational(-1), Rational(1)});

  DensePoly int_lhs;
  DensePoly int_rhs;
  for (int k = 1; k <= n; ++k) {
    int_lhs += linear_power(1, -1, static_cast<unsigned>(k)) * frac(1, k);
    const DensePoly xk_minus_1 = DensePoly::monomial(1, static_cast<std::size_t>(k)) -
                                 DensePoly::constant(1);
    int_rhs += xk_minus_1 * (Rational(binomial(n, k)) * sign_pow(k) * frac(1, k));
  }

  // (x - 1) * sum_{r<n} (1-x)^r/(r+1)  vs  sum C(n,r+1) (-1)^r/(r+1) (x^{r+1} - 1)
  DensePoly geo_lhs;
  DensePoly geo_rhs;
  for (int r = 0; r <= n - 1; ++r) {
    geo_lhs += linear_power(1, -1, static_cast<unsigned>(r)) * frac(1, r + 1);
    const DensePoly xr1_minus_1 =
        DensePoly::monomial(1, static_cast<std::size_t>(r + 1)) - DensePoly::constant(1);
    geo_rhs += xr1_minus_1 * (Rational(binomial(n, r + 1)) * sign_pow(r) * frac(1, r + 1));
  }
  geo_lhs = x_minus_one * geo_lhs;

  const Params params = {{"n", n}};
  return {exact_report("heartsuit-integrated", params, int_lhs.str(), int_rhs.str()),
          exact_report("heartsuit", params, geo_lhs.str(), geo_rhs.str())};
}

std::vector<CheckReport> check_corollary1(int n) {
  if (n < 1) throw DomainError("corollary1 needs n >= 1");
  Rational a;
  Rational b;
  for (int k = 1; k <= n; ++k) {
    const Rational c = Rational(binomial(n, k)) * sign_pow(k + 1);
    a += c * frac(1, k + 1);
    b += c * frac(1, k);
  }
  const Params params = {{"n", n}};
  return {exact_report("corollary1-a", params, a, frac(n, n + 1)),
          exact_report("corollary1-b", params, harmonic(n, 1), b)};
}

std::vector<CheckReport> check_sury93(int n) {
  if (n < 0) throw DomainError("sury93 needs n >= 0");
  Rational reciprocal_sum;
  for (int r = 0; r <= n; ++r) reciprocal_sum += Rational(BigInt(1), binomial(n, r));
  const Rational scale(BigInt(n + 1), ipow(BigInt(2), static_cast<unsigned long>(n)));
  Rational powers;
  for (int i = 0; i <= n; ++i) {
    powers += Rational(ipow(BigInt(2), static_cast<unsigned long>(i)), BigInt(i + 1));
  }
  Rational odd;
  for (int j = 1; j <= n + 1; j += 2) odd += Rational(binomial(n + 1, j), BigInt(j));
  const Params params = {{"n", n}};
  return {exact_report("sury93", params, reciprocal_sum, scale * powers),
          exact_report("sury93-odd", params, reciprocal_sum, scale * odd)};
}

CheckReport check_dsum_closed(int r, int n, int j, const HarmonicTable& h) {
  return exact_report("dsum-closed", rnj(r, n, j), dsum(r, n, j),
                      dsum_closed_form(r, n, j, h));
}

std::vector<CheckReport> check_dsum_cross(int r, int n, int j, const HarmonicTable& h,
                                          const StirlingTable& s) {
  const Rational d = dsum(r, n, j);
  std::vector<CheckReport> out;
  if (r == 1) out.push_back(exact_report("dsum-cross-unit", rnj(r, n, j), d, Rational(1)));
  if (r == 2) {
    out.push_back(exact_report("dsum-cross-stirling", rnj(r, n, j), d,
                               harmonic_difference_stirling_form(n, j, s)));
  }
  out.push_back(exact_report("dsum-cross-partition", rnj(r, n, j), d,
                             hdiff_partition_form(r - 1, n, j, h)));
  out.push_back(exact_report("dsum-cross-determinant", rnj(r, n, j), d,
                             hdiff_determinant_form(r - 1, n, j, h)));
  return out;
}

CheckReport check_determinant_vs_partition(int r, int n, int j, const HarmonicTable& h) {
  return exact_report("determinant-vs-partition", rnj(r, n, j),
                      hdiff_determinant_form(r, n, j, h),
                      hdiff_partition_form(r, n, j, h));
}

CheckReport check_triple_sum(int n, const HarmonicTable& h) {
  const Rational& h1 = h.at(n, 1);
  const Rational rhs =
      (h1.pow(3) + Rational(2) * h.at(n, 3) - Rational(3) * h.at(n, 2) * h1) / Rational(6);
  return exact_report("triple-sum", {{"n", n}}, triple_harmonic_sum(n), rhs);
}

std::vector<CheckReport> check_partition_count(int r) {
  const Params params = {{"r", r}};
  const auto count = static_cast<std::int64_t>(partitions(r).size());
  std::vector<CheckReport> out = {exact_report("partition-count", params, Rational(count),
                                               Rational(partition_count(r)))};
  if (r + 1 <= 7) {
    const auto terms = static_cast<std::int64_t>(closed_form_terms(r + 1).size());
    out.push_back(exact_report("partition-count-terms", params, Rational(count),
                               Rational(terms)));
  }
  return out;
}

double choi_partial_sum(int series, long n_terms) {
  if (series < 1 || series > 3) throw DomainError("series must be 1, 2 or 3");
  if (n_terms < 1) throw DomainError("need at least one term");
  double h1 = 0, h2 = 0, h3 = 0;
  double sum = 0, comp = 0;  // Kahan compensation
  for (long n = 1; n <= n_terms; ++n) {
    const double x = static_cast<double>(n);
    h1 += 1 / x;
    h2 += 1 / (x * x);
    h3 += 1 / (x * x * x);
    double numer = 0;
    switch (series) {
      case 1: numer = h1; break;
      case 2: numer = (h1 * h1 - h2) / 2; break;
      case 3: numer = (h1 * h1 * h1 - 3 * h1 * h2 + 2 * h3) / 6; break;
    }
    const double y = numer / ((x + 1) * (x + 2)) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

CheckReport check_choi(int series, long n_terms, double tolerance) {
  return tolerance_report("choi-series", {{"series", series}, {"N", n_terms}},
                          choi_partial_sum(series, n_terms), 1.0, tolerance);
}

}  // namespace fqv
