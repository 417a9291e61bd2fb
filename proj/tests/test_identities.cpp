#include <doctest.h>

#include <cmath>

#include "fqv/errors.hpp"
#include "fqv/identities.hpp"

using namespace fqv;

namespace {

Rational q(long a, long b) { return Rational(to_bigint(a), to_bigint(b)); }

bool all_pass(const std::vector<CheckReport>& rs) {
  for (const auto& r : rs) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("signed double-binomial sum, examples") {
  CHECK(dsum(1, 3, 2) == Rational(1));
  CHECK(dsum(2, 3, 2) == q(5, 6));
  CHECK(dsum(3, 3, 2) == q(19, 36));
  CHECK(dsum(3, 3, 2) == q(-2, 9) + q(3, 4));
  CHECK(dsum(3, 4, 1) == q(1, 16));
  CHECK_THROWS_AS(dsum(2, 3, 0), DomainError);
  CHECK_THROWS_AS(dsum(2, 3, 4), DomainError);
}

TEST_CASE("closed forms, examples") {
  CHECK(dsum_closed_form(3, 3, 2) == q(19, 36));
  CHECK(dsum_closed_form(3, 3, 2) == q(5, 6) * q(5, 6) / Rational(2) + q(13, 36) / Rational(2));
  const Rational h1 = harmonic(3, 1), h2 = harmonic(3, 2), h3 = harmonic(3, 3);
  const Rational r4 = h1 * h1 * h1 / Rational(6) + h1 * h2 / Rational(2) + h3 / Rational(3);
  CHECK(dsum_closed_form(4, 3, 3) == r4);
  CHECK(dsum(4, 3, 3) == r4);
  const StirlingTable s(5);
  CHECK(harmonic_difference_stirling_form(5, 5, s) == q(137, 60));
}

TEST_CASE("closed forms have p(r-1) terms") {
  const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11};
  for (int r = 1; r <= 7; ++r) CHECK(closed_form_terms(r).size() == expected[r - 1]);
  CHECK_THROWS_AS(closed_form_terms(8), DomainError);
}

TEST_CASE("dsum for r = 1 and r = 2") {
  const HarmonicTable h(60, 1);
  const StirlingTable s(60);
  for (int n = 1; n <= 60; ++n) {
    for (int j = 1; j <= n; ++j) {
      CHECK(dsum(1, n, j) == Rational(1));
      const Rational d = dsum(2, n, j);
      CHECK(d == h.diff(n, j, 1));
      CHECK(d == harmonic_difference_stirling_form(n, j, s));
    }
  }
}

TEST_CASE("closed form, partition form and determinant form agree for r <= 7, n <= 25") {
  const HarmonicTable h(25, 7);
  for (int r = 1; r <= 7; ++r) {
    for (int n = 1; n <= 25; ++n) {
      for (int j = 1; j <= n; ++j) {
        const Rational d = dsum(r, n, j);
        CHECK(d == dsum_closed_form(r, n, j, h));
        CHECK(d == hdiff_partition_form(r - 1, n, j, h));
        CHECK(d == hdiff_determinant_form(r - 1, n, j, h));
      }
    }
  }
}

TEST_CASE("the two expansions in q have the same coefficients") {
  for (int r = 1; r <= 5; ++r) {
    for (int n = 1; n <= 30; ++n) {
      for (int j = 1; j <= n; ++j) {
        Rational alt;
        for (int l = 0; l <= j - 1; ++l) {
          Rational t(binomial(j - 1, l), ipow(BigInt(n - l), static_cast<unsigned long>(r + 1)));
          alt += (j - l - 1) % 2 == 0 ? t : -t;
        }
        CHECK(Rational(binomial(n, j)) * alt == dsum(r + 1, n, j) / Rational(j));
      }
    }
  }
}

TEST_CASE("alternating binomial prefix sums") {
  for (int j = 1; j <= 30; ++j) {
    BigInt prefix = 0;
    for (int l = 0; l < j; ++l) {
      prefix += l % 2 == 0 ? binomial(j, l) : BigInt(-binomial(j, l));
      const BigInt expected = l % 2 == 0 ? binomial(j - 1, l) : BigInt(-binomial(j - 1, l));
      CHECK(prefix == expected);
    }
  }
}

TEST_CASE("B(n, j) vanishes") {
  CHECK(bsum(3, 2) == Rational(0));
  CHECK(bsum(10, 7) == Rational(0));
  for (int n = 1; n <= 60; ++n) {
    for (int j = 1; j <= n; ++j) CHECK(bsum_vanishes(n, j).pass);
  }
}

TEST_CASE("difference recurrences") {
  const HarmonicTable h(60, 2);
  CHECK(dsum(2, 3, 2) - dsum(2, 3, 1) == q(1, 2));
  CHECK(dsum(4, 5, 2) - dsum(4, 5, 1) ==
        ((h.at(5, 1) * h.diff(5, 2, 1)) -
         ((h.at(5, 1) * h.at(5, 1) - h.at(5, 2)) / Rational(2) -
          (h.at(3, 1) * h.at(3, 1) - h.at(3, 2)) / Rational(2))) /
            Rational(4));
  CHECK_THROWS_AS(difference_recurrences(5, 1, h), DomainError);
  for (int n = 1; n <= 60; ++n) {
    CHECK(all_pass(difference_base_cases(n)));
    for (int j = 2; j <= n; ++j) CHECK(all_pass(difference_recurrences(n, j, h)));
  }
  const auto base = difference_base_cases(4);
  CHECK(base[0].lhs == "1/16");
}

TEST_CASE("hypergeometric step") {
  CHECK(hypergeom_step(3, 2).lhs == "1/6");
  CHECK(hypergeom_step(3, 2).pass);
  CHECK(hypergeom_step(6, 4).pass);
  for (int n = 1; n <= 60; ++n) {
    CHECK(hypergeom_step(n, 1).lhs == q(1, n).str());
    for (int j = 1; j <= n; ++j) CHECK(hypergeom_step(n, j).pass);
  }
}

TEST_CASE("binomially weighted harmonic polynomials, examples") {
  const DensePoly one_minus_q(std::vector<Rational>{Rational(1), Rational(-1)}, 'q');
  CHECK(mneimneh_poly(1, 1, MneimnehSide::lhs) == one_minus_q);
  CHECK(mneimneh_poly(1, 1, MneimnehSide::rhs_eq9) == one_minus_q);
  const DensePoly n2(std::vector<Rational>{q(3, 2), Rational(-1), q(-1, 2)}, 'q');
  CHECK(mneimneh_poly(2, 1, MneimnehSide::lhs) == n2);
  for (auto side : {MneimnehSide::rhs_eq100, MneimnehSide::rhs_eq101, MneimnehSide::rhs_closed}) {
    CHECK(mneimneh_poly(3, 2, side) == mneimneh_poly(3, 2, MneimnehSide::lhs));
  }
  CHECK(mneimneh_poly(3, 2, MneimnehSide::lhs).str().find('q') != std::string::npos);
}

TEST_CASE("binomially weighted harmonic polynomials, n <= 40, r <= 6") {
  const HarmonicTable h(40, 7);
  for (int n = 1; n <= 40; ++n) {
    for (int r = 1; r <= 6; ++r) {
      const auto rs = check_mneimneh(n, r, h);
      CHECK(rs.size() == (r == 1 ? 4u : 3u));
      CHECK(all_pass(rs));
    }
  }
}

TEST_CASE("odd-n polynomial identity and its coefficient identities") {
  const auto n5 = check_lemma2(5);
  REQUIRE(n5.size() == 3);
  CHECK(n5[0].pass);
  CHECK(n5[1].family == "lemma2-x2");
  CHECK(n5[1].lhs == "5");
  CHECK(n5[2].lhs == "12");
  CHECK(check_lemma2(3)[2].lhs == "2");
  CHECK(check_lemma2(1).size() == 1);
  CHECK_THROWS_AS(check_lemma2(4), DomainError);
  for (int n = 1; n <= 41; n += 2) CHECK(all_pass(check_lemma2(n)));
}

TEST_CASE("geometric-quotient identity") {
  for (int n : {1, 4, 7}) CHECK(all_pass(check_heartsuit(n)));
  for (int n = 1; n <= 40; ++n) CHECK(all_pass(check_heartsuit(n)));
}

TEST_CASE("alternating reciprocal sums") {
  const auto n2 = check_corollary1(2);
  CHECK(n2[0].lhs == "2/3");
  CHECK(n2[1].lhs == "3/2");
  const auto n1 = check_corollary1(1);
  CHECK(n1[0].lhs == "1/2");
  CHECK(n1[1].lhs == "1");
  for (int n = 1; n <= 100; ++n) CHECK(all_pass(check_corollary1(n)));
}

TEST_CASE("sum of reciprocal binomials") {
  const auto n2 = check_sury93(2);
  CHECK(n2[0].lhs == "5/2");
  CHECK(n2[1].rhs == "5/2");
  CHECK(check_sury93(0)[0].lhs == "1");
  for (int n = 0; n <= 200; ++n) CHECK(all_pass(check_sury93(n)));
}

TEST_CASE("cross-checks emitted by the sweep") {
  const HarmonicTable h(12, 7);
  const StirlingTable s(12);
  CHECK(check_dsum_closed(5, 6, 3, h).pass);
  CHECK(check_dsum_cross(1, 6, 3, h, s).size() == 3);
  CHECK(check_dsum_cross(2, 6, 3, h, s).size() == 3);
  CHECK(check_dsum_cross(4, 6, 3, h, s).size() == 2);
  CHECK(all_pass(check_dsum_cross(7, 12, 5, h, s)));
  CHECK(check_determinant_vs_partition(6, 12, 12, h).pass);
  CHECK(check_triple_sum(12, h).pass);
  CHECK_THROWS_AS(check_triple_sum(13, h), std::exception);
}

TEST_CASE("partition counts") {
  for (int r = 1; r <= 7; ++r) CHECK(all_pass(check_partition_count(r)));
  CHECK(check_partition_count(7).size() == 1);
  CHECK(check_partition_count(6).size() == 2);
  CHECK(check_partition_count(7)[0].lhs == "15");
}

TEST_CASE("harmonic series over (n+1)(n+2)") {
  CHECK(choi_partial_sum(1, 2) == doctest::Approx(1.0 / 6 + 1.0 / 8).epsilon(1e-15));
  CHECK(choi_partial_sum(2, 1) == 0.0);
  CHECK(std::abs(choi_partial_sum(1, 1'000'000) - 1.0) < 2e-5);
  CHECK(std::abs(choi_partial_sum(2, 1'000'000) - 1.0) < 2e-4);
  // Convergence is slow: at N = 10^6 the third series is still about 6e-4 short.
  const double s3 = choi_partial_sum(3, 1'000'000);
  CHECK(s3 < 1.0);
  CHECK(1.0 - s3 > 5e-4);
  CHECK(1.0 - choi_partial_sum(3, 10'000'000) < 1.0 - s3);
  const auto rep = check_choi(1, 1000, 1e-2);
  CHECK(rep.tolerance == 1e-2);
  CHECK(rep.modulus_str() == "float");
}
