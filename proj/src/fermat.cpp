#include "fqv/fermat.hpp"

#include <string>

#include <omp.h>

#include "fqv/errors.hpp"
#include "fqv/poly.hpp"
#include "fqv/primes.hpp"

namespace fqv {

namespace {

constexpr u64 kChunk = u64{1} << 14;
constexpr u64 kParallelThreshold = u64{1} << 16;
constexpr u64 kMaxSquarablePrime = u64{1} << 32;

u64 square_modulus(u64 p) {
  if (p >= kMaxSquarablePrime) {
    throw DomainError("p^2 does not fit in 64 bits for p=" + std::to_string(p));
  }
  return p * p;
}

Params p_only(u64 p) { return {{"p", static_cast<std::int64_t>(p)}}; }

// Rational with its denominator inverted mod m.
Residue reduce(const Rational& x, u64 m) { return reduce_mod(x, m); }
Residue reduce(const BigInt& x, u64 m) { return reduce_mod(Rational(x), m); }

Residue half(u64 m) { return Residue(mod_inverse(2, m), m); }

// sum over r in [lo, hi] of b^r / r^e mod m.
u64 chunk_sum(u64 b, unsigned e, u64 lo, u64 hi, u64 m) {
  std::vector<u64> denoms;
  denoms.reserve(hi - lo + 1);
  for (u64 r = lo; r <= hi; ++r) denoms.push_back(powmod(r, e, m));
  const std::vector<u64> inv = batch_inverse(denoms, m);
  u64 bp = powmod(b, lo, m);
  Residue acc(0, m);
  for (u64 i = 0; i < inv.size(); ++i) {
    acc += Residue(mulmod(bp, inv[i], m), m);
    bp = mulmod(bp, b, m);
  }
  return acc.value();
}

// 1/C(p-2, j) for j = 0..p-2, mod p, from the ratio C(n,j)/C(n,j-1) = (n-j+1)/j.
Residue eq2_rhs_modular(u64 p) {
  const u64 n = p - 2;
  std::vector<u64> numer(n);
  for (u64 j = 1; j <= n; ++j) numer[j - 1] = n - j + 1;
  const std::vector<u64> inv = batch_inverse(numer, p);
  Residue recip(1, p);  // 1/C(n,0)
  Residue sum = recip;
  for (u64 j = 1; j <= n; ++j) {
    recip = recip * Residue(j, p) * Residue(inv[j - 1], p);
    sum += recip;
  }
  return sum * half(p);
}

Rational eq2_rhs_exact(u64 p) {
  const auto n = static_cast<std::int64_t>(p - 2);
  Rational sum;
  for (std::int64_t j = 0; j <= n; ++j) sum += Rational(BigInt(1), binomial(n, j));
  return sum / Rational(2);
}

// -sum_{r=1}^{p-1} sign^r (1^r + ... + top^r) / r, exact, summed in the
// displayed order (outer r, inner power sum).
Rational power_sum_rhs_exact(u64 p, int top, int sign) {
  Rational total;
  for (u64 r = 1; r <= p - 1; ++r) {
    BigInt s = 0;
    for (int i = 1; i <= top; ++i) s += ipow(BigInt(i), r);
    if (sign < 0 && r % 2 == 1) s = -s;
    total += Rational(s, to_bigint(static_cast<std::int64_t>(r)));
  }
  return -total;
}

// Same sum mod p, by swapping the order: -sum_i sum_r (sign*i)^r / r.
// Same sum as calling inverse_power_sum once per base, with the reciprocals
// 1/r shared across bases.
Residue power_sum_rhs_modular(u64 p, int top, int sign) {
  std::vector<u64> rs(p - 1);
  for (u64 r = 1; r < p; ++r) rs[r - 1] = r;
  const std::vector<u64> inv = batch_inverse(rs, p);
  u64 total = 0;
  for (int i = 1; i <= top; ++i) {
    const u64 b = to_residue(static_cast<std::int64_t>(sign) * i, p);
    u64 bp = b;
    for (u64 r = 1; r < p; ++r) {
      total += mulmod(bp, inv[r - 1], p);
      if (total >= p) total -= p;
      bp = mulmod(bp, b, p);
    }
  }
  return -Residue(total, p);
}

// C(p,r)/p for r = 1..p-1 mod p via c_r = c_{r-1} (p-r+1)/r, c_1 = 1.
std::vector<Residue> binom_over_p_table(u64 p, u64 upto) {
  std::vector<u64> rs(upto);
  for (u64 r = 1; r <= upto; ++r) rs[r - 1] = r;
  const std::vector<u64> inv = batch_inverse(rs, p);
  std::vector<Residue> c;
  c.reserve(upto);
  c.emplace_back(1, p);
  for (u64 r = 2; r <= upto; ++r) {
    c.push_back(c.back() * Residue(p - r + 1, p) * Residue(inv[r - 1], p));
  }
  return c;
}

}  // namespace

std::string_view to_string(Backend b) {
  return b == Backend::exact ? "exact" : "modular";
}

std::string_view to_string(Lemma1Variant v) {
  switch (v) {
    case Lemma1Variant::eq2: return "eq2";
    case Lemma1Variant::eq3: return "eq3";
    case Lemma1Variant::eq4: return "eq4";
    case Lemma1Variant::eq5: return "eq5";
    case Lemma1Variant::eq6a: return "eq6a";
    case Lemma1Variant::eq6b: return "eq6b";
  }
  return "?";
}

void require_odd_prime(u64 p) {
  if (p < 3 || !is_prime(p)) throw NotPrime(p);
}

BigInt fermat_quotient(std::int64_t a, u64 p) {
  require_odd_prime(p);
  const BigInt base = to_bigint(a);
  const BigInt num = ipow(base, p) - base;
  const BigInt pp(static_cast<unsigned long>(p));
  if (!mpz_divisible_p(num.get_mpz_t(), pp.get_mpz_t())) {
    throw std::logic_error("a^p - a not divisible by p");
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
  return q;
}

BigInt base2_fermat_quotient(u64 p) {
  require_odd_prime(p);
  BigInt q = ipow(BigInt(2), p - 1) - 1;
  mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(p));
  return q;
}

Residue fermat_quotient_residue(std::int64_t a, u64 p, u64 m) {
  require_odd_prime(p);
  if (m % p != 0) throw DomainError("modulus must be a power of p");
  const BigInt pm = BigInt(static_cast<unsigned long>(p)) *
                    BigInt(static_cast<unsigned long>(m));
  BigInt base = to_bigint(a);
  mpz_mod(base.get_mpz_t(), base.get_mpz_t(), pm.get_mpz_t());
  BigInt x;
  mpz_powm_ui(x.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(p),
              pm.get_mpz_t());
  x -= base;
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), pm.get_mpz_t());
  mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
  return Residue(x.get_ui(), m);
}

Residue base2_fermat_quotient_residue(u64 p, u64 m) {
  require_odd_prime(p);
  if (m % p != 0) throw DomainError("modulus must be a power of p");
  const BigInt pm = BigInt(static_cast<unsigned long>(p)) *
                    BigInt(static_cast<unsigned long>(m));
  BigInt x;
  mpz_powm_ui(x.get_mpz_t(), BigInt(2).get_mpz_t(),
              static_cast<unsigned long>(p - 1), pm.get_mpz_t());
  x -= 1;
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), pm.get_mpz_t());
  mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
  return Residue(x.get_ui(), m);
}

Residue inverse_power_sum(std::int64_t base, unsigned e, u64 limit, u64 m) {
  if (limit == 0) return Residue(0, m);
  const u64 b = to_residue(base, m);
  const u64 chunks = (limit + kChunk - 1) / kChunk;
  std::vector<u64> partial(chunks, 0);
  const auto n = static_cast<std::int64_t>(chunks);
  // Exceptions must not cross the parallel region; rethrow afterwards.
  std::exception_ptr failure;
#pragma omp parallel for schedule(static) if (limit >= kParallelThreshold)
  for (std::int64_t c = 0; c < n; ++c) {
    try {
      const u64 lo = static_cast<u64>(c) * kChunk + 1;
      const u64 hi = std::min(limit, lo + kChunk - 1);
      partial[c] = chunk_sum(b, e, lo, hi, m);
    } catch (...) {
#pragma omp critical(fqv_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  Residue total(0, m);
  for (u64 s : partial) total += Residue(s, m);
  return total;
}

Residue inverse_power_sum_reference(std::int64_t base, unsigned e, u64 limit,
                                    u64 m) {
  const u64 b = to_residue(base, m);
  Residue total(0, m);
  for (u64 r = 1; r <= limit; ++r) {
    const u64 denom = powmod(r, e, m);
    const u64 inv = mod_inverse(static_cast<std::int64_t>(denom), m);
    total += Residue(mulmod(powmod(b, r, m), inv, m), m);
  }
  return total;
}

Residue odd_inverse_sum(u64 limit, unsigned e, u64 m) {
  std::vector<u64> denoms;
  for (u64 r = 1; r <= limit; r += 2) denoms.push_back(powmod(r, e, m));
  Residue total(0, m);
  for (u64 v : batch_inverse(denoms, m)) total += Residue(v, m);
  return total;
}

Rational inverse_power_sum_exact(std::int64_t base, unsigned e, u64 limit) {
  const BigInt b = to_bigint(base);
  Rational total;
  BigInt bp = 1;
  for (u64 r = 1; r <= limit; ++r) {
    bp *= b;
    total += Rational(bp, ipow(BigInt(static_cast<unsigned long>(r)), e));
  }
  return total;
}

Rational odd_inverse_sum_exact(u64 limit, unsigned e) {
  Rational total;
  for (u64 r = 1; r <= limit; r += 2) {
    total += Rational(BigInt(1), ipow(BigInt(static_cast<unsigned long>(r)), e));
  }
  return total;
}

CheckReport check_observation(int m) {
  if (m < 1) throw DomainError("observation needs m >= 1");
  const DensePoly x = DensePoly::monomial(1, 1);
  const DensePoly lhs = DensePoly::monomial(1, static_cast<std::size_t>(m)) - x;
  DensePoly rhs;
  for (int r = 1; r <= m - 1; ++r) {
    const int sign = (m - r) % 2 == 0 ? 1 : -1;
    rhs += shifted_power(1, static_cast<unsigned>(r)) *
           Rational(binomial(m, r) * sign);
  }
  rhs += shifted_power(1, static_cast<unsigned>(m));
  rhs -= x;
  rhs += DensePoly::constant(m % 2 == 0 ? 1 : -1);
  return exact_report("observation", {{"m", m}}, lhs.str(), rhs.str());
}

CheckReport check_spadesuit(std::int64_t a, u64 p, Backend backend) {
  require_odd_prime(p);
  Params params = {{"p", static_cast<std::int64_t>(p)}, {"a", a}};
  if (backend == Backend::exact) {
    const Residue lhs = reduce(fermat_quotient(a, p), p);
    const Rational rhs =
        inverse_power_sum_exact(a + 1, 1, p - 1) + Rational(fermat_quotient(a + 1, p));
    return modular_report("spadesuit", std::move(params), lhs, reduce(rhs, p));
  }
  const Residue lhs = fermat_quotient_residue(a, p, p);
  const Residue rhs =
      inverse_power_sum(a + 1, 1, p - 1, p) + fermat_quotient_residue(a + 1, p, p);
  return modular_report("spadesuit", std::move(params), lhs, rhs);
}

std::vector<CheckReport> check_lemma1(u64 p, Lemma1Variant variant, int n,
                                      Backend backend) {
  require_odd_prime(p);
  const bool exact = backend == Backend::exact;
  const std::string family = "lemma1-" + std::string(to_string(variant));
  Params params = p_only(p);

  // Base-2 quotient (2^{p-1}-1)/p, the left side of every variant but eq3/eq4.
  auto quotient = [&] {
    return exact ? reduce(base2_fermat_quotient(p), p)
                 : base2_fermat_quotient_residue(p, p);
  };

  switch (variant) {
    case Lemma1Variant::eq2: {
      const Residue rhs = exact ? reduce(eq2_rhs_exact(p), p) : eq2_rhs_modular(p);
      return {modular_report(family, params, quotient(), rhs)};
    }
    case Lemma1Variant::eq3:
    case Lemma1Variant::eq4: {
      if (n < 2) throw DomainError(family + " needs n >= 2");
      params.push_back({"n", n});
      const bool alt = variant == Lemma1Variant::eq4;
      const int top = alt ? n - 1 : n;
      const int sign = alt ? -1 : 1;
      const Residue lhs = exact ? reduce(fermat_quotient(n, p), p)
                                : fermat_quotient_residue(n, p, p);
      const Residue rhs = exact ? reduce(power_sum_rhs_exact(p, top, sign), p)
                                : power_sum_rhs_modular(p, top, sign);
      return {modular_report(family, params, lhs, rhs)};
    }
    case Lemma1Variant::eq5:
    case Lemma1Variant::eq6a: {
      const std::int64_t base = variant == Lemma1Variant::eq5 ? 2 : -1;
      const Residue sum = exact ? reduce(inverse_power_sum_exact(base, 1, p - 1), p)
                                : inverse_power_sum(base, 1, p - 1, p);
      return {modular_report(family, params, quotient(), -(sum * half(p)))};
    }
    case Lemma1Variant::eq6b: {
      const Residue odd = exact ? reduce(odd_inverse_sum_exact(p - 2, 1), p)
                                : odd_inverse_sum(p - 2, 1, p);
      const u64 halfway = (p - 1) / 2;
      const Residue h = exact ? reduce(inverse_power_sum_exact(1, 1, halfway), p)
                              : inverse_power_sum(1, 1, halfway, p);
      const Residue q = quotient();
      return {modular_report(family, params, q, odd),
              modular_report(family + "-half", params, q, -(h * half(p)))};
    }
  }
  throw std::logic_error("unknown lemma1 variant");
}

CheckReport check_eisenstein(u64 p, Backend backend) {
  require_odd_prime(p);
  if (backend == Backend::exact) {
    return modular_report("eisenstein", p_only(p),
                          reduce(base2_fermat_quotient(p), p),
                          reduce(odd_inverse_sum_exact(p - 2, 1), p));
  }
  return modular_report("eisenstein", p_only(p),
                        base2_fermat_quotient_residue(p, p),
                        odd_inverse_sum(p - 2, 1, p));
}

CheckReport binom_p_over_p_residue(u64 p, u64 r, Backend backend) {
  require_odd_prime(p);
  if (r == 0 || r >= p) throw DomainError("need 0 < r < p");
  Params params = {{"p", static_cast<std::int64_t>(p)},
                   {"r", static_cast<std::int64_t>(r)}};
  const auto rs = static_cast<std::int64_t>(r);
  const Rational expected(BigInt(r % 2 == 1 ? 1 : -1), to_bigint(rs));
  if (backend == Backend::exact) {
    BigInt c = binomial(static_cast<std::int64_t>(p), rs);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
    return modular_report("binom-over-p", std::move(params), reduce(c, p),
                          reduce(expected, p));
  }
  // (p-1)(p-2)...(p-r+1)/r!
  Residue lhs(1, p);
  Residue fact(1, p);
  for (u64 i = 1; i < r; ++i) lhs *= Residue(p - i, p);
  for (u64 i = 2; i <= r; ++i) fact *= Residue(i, p);
  const Residue rhs = Residue::from_signed(r % 2 == 1 ? 1 : -1, p) / Residue(r, p);
  return modular_report("binom-over-p", std::move(params), lhs / fact, rhs);
}

CheckReport check_wolstenholme(u64 p, Backend backend, bool force) {
  require_odd_prime(p);
  if (p <= 3 && !force) {
    throw DomainError("Wolstenholme's congruence needs p > 3, got p=" +
                      std::to_string(p));
  }
  const u64 m = square_modulus(p);
  const Residue lhs = backend == Backend::exact
                          ? reduce(inverse_power_sum_exact(1, 1, p - 1), m)
                          : inverse_power_sum(1, 1, p - 1, m);
  return modular_report("wolstenholme", p_only(p), lhs, Residue(0, m));
}

Residue prop1_rhs(u64 p, Backend backend) {
  require_odd_prime(p);
  const u64 m = square_modulus(p);
  if (backend == Backend::exact) {
    // -sum 2^{r-1}/r
    return reduce(-inverse_power_sum_exact(2, 1, p - 1) / Rational(2), m);
  }
  return -(inverse_power_sum(2, 1, p - 1, m) * half(m));
}

Residue thm1_rhs(u64 p, Backend backend) {
  require_odd_prime(p);
  const u64 m = square_modulus(p);
  if (backend == Backend::exact) {
    const Rational rhs =
        odd_inverse_sum_exact(p - 2, 1) -
        Rational(static_cast<std::int64_t>(p)) *
            inverse_power_sum_exact(2, 2, p - 1) / Rational(2);
    return reduce(rhs, m);
  }
  // p * (sum 2^{r-1}/r^2): the explicit factor p means only the sum's value
  // mod p matters, but it is computed mod p^2 and scaled, one code path.
  const Residue weighted = inverse_power_sum(2, 2, p - 1, m) * half(m);
  return odd_inverse_sum(p - 2, 1, m) - Residue(p, m) * weighted;
}

std::vector<CheckReport> check_prop1(u64 p, Backend backend) {
  require_odd_prime(p);
  const u64 m = square_modulus(p);
  const Residue lhs = backend == Backend::exact
                          ? reduce(base2_fermat_quotient(p), m)
                          : base2_fermat_quotient_residue(p, m);
  std::vector<CheckReport> out;
  out.push_back(modular_report("prop1", p_only(p), lhs, prop1_rhs(p, backend)));
  if (p < 5) return out;  // p = 3 is settled by the direct computation above

  // sum_{odd r<p} C(p,r)/(p r) = 0 (mod p)
  Residue aux(0, p);
  if (backend == Backend::exact) {
    Rational s;
    const auto pi = static_cast<std::int64_t>(p);
    for (std::int64_t r = 1; r < pi; r += 2) {
      s += Rational(binomial(pi, r), to_bigint(pi * r));
    }
    aux = reduce(s, p);
  } else {
    const std::vector<Residue> c = binom_over_p_table(p, p - 1);
    for (u64 r = 1; r < p; r += 2) aux += c[r - 1] / Residue(r, p);
  }
  out.push_back(modular_report("prop1-aux", p_only(p), aux, Residue(0, p)));
  return out;
}

CheckReport check_thm1(u64 p, Backend backend) {
  require_odd_prime(p);
  const u64 m = square_modulus(p);
  const Residue lhs = backend == Backend::exact
                          ? reduce(base2_fermat_quotient(p), m)
                          : base2_fermat_quotient_residue(p, m);
  return modular_report("thm1", p_only(p), lhs, thm1_rhs(p, backend));
}

}  // namespace fqv
