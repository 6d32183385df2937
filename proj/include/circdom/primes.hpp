#pragma once

#include <cstdint>
#include <vector>

#include "circdom/arith.hpp"

namespace circdom {

/// Primes l in [L+1, 2L] with gcd(l, n) = 1, sorted ascending.
struct PrimeWindow {
  u64 L = 0;
  u64 n = 0;
  std::vector<u64> primes;

  std::size_t size() const noexcept { return primes.size(); }
  bool empty() const noexcept { return primes.empty(); }
};

/// Segmented sieve over [L+1, 2L]; base primes up to sqrt(2L).
PrimeWindow primes_in_window(u64 L, u64 n);

/// Number of distinct primes dividing n, by trial division.
unsigned distinct_prime_divisors(u64 n);

/// Deterministic trial-division primality test. Test-scale only.
bool is_prime(u64 x) noexcept;

}  // namespace circdom
