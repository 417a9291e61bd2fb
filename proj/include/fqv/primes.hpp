#pragma once

#include <cstdint>
#include <vector>

namespace fqv {

/// Deterministic Miller-Rabin. The witness set {2, ..., 37} is exact for
/// every 64-bit input.
bool is_prime(std::uint64_t n);

/// Primes in [lo, hi], ascending. Sieve of Eratosthenes below 10^7,
/// Miller-Rabin beyond.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

inline constexpr std::uint64_t kSieveLimit = 10'000'000;

}  // namespace fqv
