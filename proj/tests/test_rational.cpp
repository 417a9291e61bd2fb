#include <doctest.h>

#include <numeric>
#include <random>

#include "fqv/errors.hpp"
#include "fqv/modular.hpp"
#include "fqv/rational.hpp"

using namespace fqv;

namespace {

// C(n, k) by the multiplicative formula; each partial product is itself a
// binomial coefficient, so the division is exact.
BigInt binomial_by_product(long n, long k) {
  BigInt c = 1;
  for (long i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

BigInt factorial_by_loop(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational q(long a, long b) { return Rational(to_bigint(a), to_bigint(b)); }

}  // namespace

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  CHECK(q(4, -6).str() == "-2/3");
  CHECK(q(4, -6).num() == -2);
  CHECK(q(4, -6).den() == 3);
  CHECK(q(0, -5).str() == "0");
  CHECK(q(0, -5).den() == 1);
  CHECK(q(10, 5).str() == "2");
  CHECK(q(10, 5).is_integer());
  CHECK_THROWS_AS(q(1, 0), DomainError);
}

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(1, 2) - q(1, 3) == q(1, 6));
  CHECK(q(2, 3) * q(9, 4) == q(3, 2));
  CHECK(q(2, 3) / q(4, 9) == q(3, 2));
  CHECK(q(-2, 3).inverse() == q(-3, 2));
  CHECK(q(-2, 3).pow(3) == q(-8, 27));
  CHECK(q(1, 3) < q(1, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
}

TEST_CASE("gcd invariant holds after random operations") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    Rational a = q(num(rng), den(rng)), b = q(num(rng), den(rng));
    for (const Rational& r : {a + b, a - b, a * b}) {
      CHECK(r.den() > 0);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("binomial examples") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(52, 26) == binomial_by_product(52, 26));
  CHECK(binomial(52, 26) == BigInt("495918532948104"));
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
}

TEST_CASE("binomial matches the multiplicative formula") {
  for (long n = 0; n <= 80; ++n) {
    for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial_by_product(n, k));
  }
}

TEST_CASE("Pascal's rule over the triangle n <= 100") {
  for (long n = 1; n <= 100; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5, 3) == 60);
  CHECK(falling_factorial(9, 0) == 1);
  CHECK(falling_factorial(-3, 0) == 1);
  CHECK(falling_factorial(4, 6) == 0);
  CHECK(falling_factorial(-2, 3) == -24);
  for (long n = 0; n <= 60; ++n) {
    for (long j = 0; j <= n; ++j) {
      CHECK(falling_factorial(n, j) == binomial(n, j) * factorial_by_loop(j));
    }
  }
}

TEST_CASE("mod_inverse examples") {
  u64 found = 0;
  for (u64 x = 0; x < 25; ++x) {
    if (3 * x % 25 == 1) found = x;
  }
  CHECK(found == 17);
  CHECK(mod_inverse(3, 25) == 17);
  CHECK(mod_inverse(1, 97) == 1);
  CHECK(mod_inverse(-1, 7) == 6);
  try {
    mod_inverse(4, 10);
    FAIL("expected NotInvertible");
  } catch (const NotInvertible& e) {
    CHECK(e.gcd() == 2);
  }
}

TEST_CASE("mod_inverse over random coprime pairs") {
  std::mt19937_64 rng(2024);
  int tested = 0;
  while (tested < 10000) {
    const u64 m = std::uniform_int_distribution<u64>(2, u64{1} << 62)(rng);
    const auto a = std::uniform_int_distribution<std::int64_t>(-(std::int64_t{1} << 62),
                                                               std::int64_t{1} << 62)(rng);
    if (std::gcd(static_cast<u64>(a < 0 ? -a : a), m) != 1) continue;
    const u64 x = mod_inverse(a, m);
    CHECK(x < m);
    const unsigned __int128 prod =
        static_cast<unsigned __int128>(to_residue(a, m)) * x % m;
    CHECK(static_cast<u64>(prod) == 1 % m);
    ++tested;
  }
}

TEST_CASE("mulmod and powmod agree with 128-bit arithmetic") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5000; ++i) {
    const u64 m = std::uniform_int_distribution<u64>(2, ~u64{0})(rng);
    const u64 a = rng() % m, b = rng() % m;
    CHECK(mulmod(a, b, m) ==
          static_cast<u64>(static_cast<unsigned __int128>(a) * b % m));
    const u64 e = rng() % 50;
    unsigned __int128 acc = 1 % m;
    for (u64 k = 0; k < e; ++k) acc = acc * a % m;
    CHECK(powmod(a, e, m) == static_cast<u64>(acc));
  }
}

TEST_CASE("batch_inverse matches one-at-a-time inverses") {
  const u64 m = 1'000'003ull * 1'000'003ull;
  std::vector<u64> values;
  for (u64 v = 1; v <= 500; ++v) values.push_back(v * 7919);
  const auto inv = batch_inverse(values, m);
  REQUIRE(inv.size() == values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    CHECK(inv[i] == mod_inverse(static_cast<std::int64_t>(values[i]), m));
  }
  values.push_back(1'000'003);
  CHECK_THROWS_AS(batch_inverse(values, m), NotInvertible);
}

TEST_CASE("residues carry their modulus") {
  const Residue a(7, 5);
  CHECK(a.value() == 2);
  CHECK(Residue::from_signed(-1, 5).value() == 4);
  CHECK((a + Residue(4, 5)).value() == 1);
  CHECK((a * Residue(3, 5)).value() == 1);
  CHECK((Residue(1, 5) / Residue(3, 5)).value() == 2);
  CHECK((-a).value() == 3);
  CHECK(a.pow(4).value() == 1);
  CHECK_THROWS_AS(Residue(1, 1), DomainError);
  CHECK_THROWS_AS(a + Residue(1, 7), ModulusMismatch);
  CHECK_THROWS_AS(a * Residue(1, 25), ModulusMismatch);
  CHECK(Residue(2, 5) != Residue(2, 7));
}

TEST_CASE("reduce_mod examples") {
  CHECK(reduce_mod(q(4, 3), 5) == Residue(3, 5));
  CHECK(reduce_mod(Rational(0), 7) == Residue(0, 7));
  CHECK(reduce_mod(q(-16, 3), 25) == Residue(3, 25));
  CHECK_THROWS_AS(reduce_mod(q(1, 2), 4), NotInvertible);
}

TEST_CASE("residues_congruent examples") {
  CHECK(residues_congruent(q(4, 3), Rational(3), 5));
  CHECK(residues_congruent(q(22, 7), q(22, 7), 9));
  CHECK_FALSE(residues_congruent(q(1, 2), q(1, 3), 7));
}

TEST_CASE("reduce_mod is a ring homomorphism") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000), den(1, 1'000'000);
  const u64 moduli[] = {5, 49, 97, 1'000'003, 1'000'003ull * 1'000'003ull, 4'294'967'291ull};
  int tested = 0;
  for (int i = 0; i < 10000; ++i) {
    const u64 m = moduli[i % std::size(moduli)];
    const Rational x = q(num(rng), den(rng)), y = q(num(rng), den(rng));
    if (std::gcd(x.den().get_ui(), m) != 1 || std::gcd(y.den().get_ui(), m) != 1) continue;
    CHECK(reduce_mod(x + y, m) == reduce_mod(x, m) + reduce_mod(y, m));
    CHECK(reduce_mod(x * y, m) == reduce_mod(x, m) * reduce_mod(y, m));
    CHECK(reduce_mod(x - y, m) == reduce_mod(x, m) - reduce_mod(y, m));
    ++tested;
  }
  CHECK(tested > 5000);
}
