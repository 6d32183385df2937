#include "circdom/primes.hpp"

#include <cmath>

#include "circdom/error.hpp"

namespace circdom {
namespace {

u64 isqrt(u64 x) noexcept {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::vector<u64> small_primes(u64 limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> out;
  for (u64 p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (u64 m = p * p; m <= limit; m += p) composite[m] = true;
  }
  return out;
}

}  // namespace

PrimeWindow primes_in_window(u64 L, u64 n) {
  if (L < 1) throw Error(ErrorKind::InvalidArgument, "primes_in_window: L must be >= 1");
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "primes_in_window: n must be >= 2");

  PrimeWindow window{L, n, {}};
  const u64 lo = L + 1;
  const u64 hi = 2 * L;
  if (lo > hi) return window;

  // composite[i] refers to lo + i.
  std::vector<bool> composite(hi - lo + 1, false);
  for (u64 p : small_primes(isqrt(hi))) {
    u64 first = std::max(p * p, (lo + p - 1) / p * p);
    for (u64 m = first; m <= hi; m += p) composite[m - lo] = true;
  }
  for (u64 v = lo; v <= hi; ++v) {
    if (v < 2 || composite[v - lo]) continue;
    if (gcd(v, n) == 1) window.primes.push_back(v);
  }
  return window;
}

unsigned distinct_prime_divisors(u64 n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "distinct_prime_divisors: n must be >= 2");
  unsigned count = 0;
  for (u64 p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    ++count;
    while (n % p == 0) n /= p;
  }
  if (n > 1) ++count;
  return count;
}

bool is_prime(u64 x) noexcept {
  if (x < 2) return false;
  for (u64 d = 2; d <= x / d; ++d)
    if (x % d == 0) return false;
  return true;
}

}  // namespace circdom
