#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "fqv/modular.hpp"
#include "fqv/rational.hpp"
#include "fqv/report.hpp"

namespace fqv {

/// How a congruence check evaluates its two sides. `exact` builds both sides
/// as Rationals and reduces at the end; `modular` never leaves Z/mZ.
enum class Backend { exact, modular };

std::string_view to_string(Backend b);

/// Throws NotPrime unless p is an odd prime.
void require_odd_prime(u64 p);

/// (a^p - a)/p, exact.
BigInt fermat_quotient(std::int64_t a, u64 p);
/// (2^{p-1} - 1)/p, exact.
BigInt base2_fermat_quotient(u64 p);

/// (a^p - a)/p mod m, where m is a power of p. Works from a^p mod p*m.
Residue fermat_quotient_residue(std::int64_t a, u64 p, u64 m);
/// (2^{p-1} - 1)/p mod m, m a power of p.
Residue base2_fermat_quotient_residue(u64 p, u64 m);

/// sum_{r=1}^{limit} base^r / r^e  (mod m).
///
/// Splits [1, limit] into fixed-size chunks, each chunk inverting its r^e in
/// one batch, and runs the chunks as an OpenMP loop once limit is large
/// enough. Chunking does not depend on the thread count, so the result is the
/// same for any team size. Throws NotInvertible if some r^e is not a unit.
Residue inverse_power_sum(std::int64_t base, unsigned e, u64 limit, u64 m);

/// Serial reference for inverse_power_sum: one extended-Euclid inverse per
/// term. Kept for testing and benchmarking.
Residue inverse_power_sum_reference(std::int64_t base, unsigned e, u64 limit,
                                    u64 m);

/// sum_{r odd, r <= limit} 1/r^e (mod m).
Residue odd_inverse_sum(u64 limit, unsigned e, u64 m);

/// Exact counterparts.
Rational inverse_power_sum_exact(std::int64_t base, unsigned e, u64 limit);
Rational odd_inverse_sum_exact(u64 limit, unsigned e);

// Congruence checks. Each record names its own family id; checks that assert
// more than one equality return one record per equality.

/// x^m - x = sum_{r<m} C(m,r)(x+1)^r(-1)^{m-r} + (x+1)^m - x + (-1)^m, the
/// polynomial identity behind every congruence below (cleared of the 1/m).
CheckReport check_observation(int m);

/// (a^p-a)/p = sum_{r<p} (a+1)^r/r + ((a+1)^p-(a+1))/p  (mod p).
CheckReport check_spadesuit(std::int64_t a, u64 p, Backend backend);

enum class Lemma1Variant { eq2, eq3, eq4, eq5, eq6a, eq6b };

std::string_view to_string(Lemma1Variant v);

/// Generalized Eisenstein congruences mod p. `n` is used by eq3/eq4 only and
/// must be >= 2 there. eq6b yields two records (odd-reciprocal form and the
/// half-range harmonic form).
std::vector<CheckReport> check_lemma1(u64 p, Lemma1Variant variant, int n,
                                      Backend backend);

/// (2^{p-1}-1)/p = sum_{odd j < p-1} 1/j  (mod p).
CheckReport check_eisenstein(u64 p, Backend backend);

/// C(p,r)/p = (-1)^{r-1}/r  (mod p), 0 < r < p.
CheckReport binom_p_over_p_residue(u64 p, u64 r, Backend backend);

/// H_{p-1} = 0 (mod p^2). Throws DomainError for p <= 3 unless `force`,
/// in which case the (failing) record for p = 3 is still produced.
CheckReport check_wolstenholme(u64 p, Backend backend, bool force = false);

/// (2^{p-1}-1)/p = -sum_{r<p} 2^{r-1}/r  (mod p^2), plus for p >= 5 the
/// auxiliary sum_{odd r<p} C(p,r)/(p r) = 0 (mod p) ("prop1-aux").
std::vector<CheckReport> check_prop1(u64 p, Backend backend);

/// (2^{p-1}-1)/p = sum_{odd r<p} 1/r - p sum_{r<p} 2^{r-1}/r^2  (mod p^2).
CheckReport check_thm1(u64 p, Backend backend);

/// Right-hand sides of check_prop1 and check_thm1 as residues mod p^2.
Residue prop1_rhs(u64 p, Backend backend);
Residue thm1_rhs(u64 p, Backend backend);

}  // namespace fqv
