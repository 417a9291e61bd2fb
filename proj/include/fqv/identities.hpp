#pragma once

#include <array>
#include <span>
#include <vector>

#include "fqv/harmonic.hpp"
#include "fqv/poly.hpp"
#include "fqv/rational.hpp"
#include "fqv/report.hpp"

namespace fqv {

/// Signed double-binomial sum
///   D_r(n, j) = sum_{l=0}^{j-1} (-1)^{j-l-1} C(n-l-1, n-j) C(n, l) / (n-l)^{r-1},
/// 1 <= j <= n, r >= 1. r = 1, 2, 3, 4 are the quantities A, C, D and
/// the fraktur D of the harmonic-sum lemmas.
Rational dsum(int r, int n, int j);

/// One monomial of a closed form: coeff * prod_t (H_n^{(t)} - H_{n-j}^{(t)})^{exponents[t-1]}.
struct ClosedFormTerm {
  Rational coeff;
  std::array<int, 6> exponents;
};

/// Transcribed closed form of D_r as a polynomial in harmonic differences,
/// 1 <= r <= 7. D_r has p(r-1) terms.
std::span<const ClosedFormTerm> closed_form_terms(int r);

Rational dsum_closed_form(int r, int n, int j, const HarmonicTable& h);
Rational dsum_closed_form(int r, int n, int j);

/// (1/(n)_j) sum_{v<j} (-1)^{j-v-1} (v+1) stf(j, v+1) n^v, which equals
/// H_n - H_{n-j}.
Rational harmonic_difference_stirling_form(int n, int j, const StirlingTable& s);

/// B(n, j) = sum_{l=0}^{j} (-1)^{j-l} C(n-l, n-j) C(n, l), which vanishes.
Rational bsum(int n, int j);
CheckReport bsum_vanishes(int n, int j);

/// First-difference recurrences of C, D, E and their order-4 analogues,
/// 2 <= j <= n.
std::vector<CheckReport> difference_recurrences(int n, int j,
                                                const HarmonicTable& h);
/// D(n,1) = 1/n^2, fraktur D(n,1) = 1/n^3, fraktur E(n,1) = 1/n^2.
std::vector<CheckReport> difference_base_cases(int n);

/// sum_{l<j} (-1)^{j-l-1} C(j-1,l)/(n-l) = (j-1)!(n-j)!/n!.
CheckReport hypergeom_step(int n, int j);

enum class MneimnehSide { lhs, rhs_eq9, rhs_eq100, rhs_eq101, rhs_closed };

/// Polynomials in q for the binomially weighted harmonic sum
///   sum_k H_k^{(r)} C(n,k) (1-q)^k q^{n-k}
/// (`lhs`) and its four expansions in powers of q. rhs_eq9 needs r = 1;
/// rhs_closed needs r <= 7.
DensePoly mneimneh_poly(int n, int r, MneimnehSide side, const HarmonicTable& h);
DensePoly mneimneh_poly(int n, int r, MneimnehSide side);

/// lhs against every right-hand side available for (n, r).
std::vector<CheckReport> check_mneimneh(int n, int r, const HarmonicTable& h);

/// Odd n. The polynomial identity plus, for n >= 3, the two identities read
/// off the x^2 and x^3 coefficients.
std::vector<CheckReport> check_lemma2(int n);

/// The integrated identity sum (1-x)^k/k = sum C(n,k)(-1)^k (x^k-1)/k, and
/// its reindexed geometric-quotient form multiplied through by (x - 1).
std::vector<CheckReport> check_heartsuit(int n);

std::vector<CheckReport> check_corollary1(int n);

/// sum 1/C(n,r) = (n+1)/2^n sum 2^i/(i+1) = (n+1)/2^n sum_{odd j} C(n+1,j)/j.
std::vector<CheckReport> check_sury93(int n);

CheckReport check_dsum_closed(int r, int n, int j, const HarmonicTable& h);
/// dsum against the partition-sum and determinant forms (and for r = 2 the
/// Stirling form; for r = 1 the constant 1).
std::vector<CheckReport> check_dsum_cross(int r, int n, int j,
                                          const HarmonicTable& h,
                                          const StirlingTable& s);
CheckReport check_determinant_vs_partition(int r, int n, int j,
                                           const HarmonicTable& h);
CheckReport check_triple_sum(int n, const HarmonicTable& h);

/// Enumerated partitions of r against the pentagonal recurrence and, for
/// r <= 6, against the number of terms in the closed form of D_{r+1}.
std::vector<CheckReport> check_partition_count(int r);

/// Partial sum up to N of
///   1: H_n / ((n+1)(n+2))
///   2: (H_n^2 - H_n^{(2)}) / (2 (n+1)(n+2))
///   3: (H_n^3 - 3 H_n H_n^{(2)} + 2 H_n^{(3)}) / (6 (n+1)(n+2))
/// Each full series sums to 1.
double choi_partial_sum(int series, long n_terms);
CheckReport check_choi(int series, long n_terms, double tolerance);

}  // namespace fqv
