#include "fqv/primes.hpp"

#include <algorithm>
#include <array>

#include "fqv/modular.hpp"

namespace fqv {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                     17, 19, 23, 29, 31, 37};
  for (u64 w : kWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo,
                                           std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < lo || hi < 2) return out;
  const u64 sieve_hi = std::min(hi, kSieveLimit - 1);
  if (lo <= sieve_hi) {
    std::vector<bool> composite(sieve_hi + 1, false);
    for (u64 i = 2; i * i <= sieve_hi; ++i) {
      if (composite[i]) continue;
      for (u64 j = i * i; j <= sieve_hi; j += i) composite[j] = true;
    }
    for (u64 n = std::max<u64>(lo, 2); n <= sieve_hi; ++n) {
      if (!composite[n]) out.push_back(n);
    }
  }
  for (u64 n = std::max(lo, kSieveLimit); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == UINT64_MAX) break;
  }
  return out;
}

}  // namespace fqv
