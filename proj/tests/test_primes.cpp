#include <doctest.h>

#include <cmath>
#include <vector>

#include "circdom/primes.hpp"
#include "circdom/rng.hpp"

using namespace circdom;

namespace {

std::vector<u64> trial_division_window(u64 L, u64 n) {
  std::vector<u64> out;
  for (u64 v = L + 1; v <= 2 * L; ++v)
    if (is_prime(v) && gcd(v, n) == 1) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("primes_in_window examples") {
  CHECK(primes_in_window(1, 6).primes.empty());
  CHECK(primes_in_window(3, 101).primes == std::vector<u64>{5});
  CHECK(primes_in_window(10, 101).primes == std::vector<u64>{11, 13, 17, 19});
  CHECK(primes_in_window(1, 7).primes == std::vector<u64>{2});
  CHECK(primes_in_window(10, 11 * 13).primes == std::vector<u64>{17, 19});
}

TEST_CASE("segmented sieve matches trial division") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const u64 L = 1 + rng.below(3000);
    const u64 n = 2 + rng.below(1'000'000);
    const PrimeWindow w = primes_in_window(L, n);
    CHECK(w.primes == trial_division_window(L, n));
    for (u64 p : w.primes) CHECK(is_prime(p));
  }
}

TEST_CASE("window count stays within the prime-number-theorem band") {
  for (u64 n : {10007u, 30030u, 65536u, 1000003u}) {
    for (u64 L = 100; L < 5000; L = L * 3 / 2) {
      const double count = static_cast<double>(primes_in_window(L, n).size());
      const double band = 0.5 * static_cast<double>(L) / std::log(2.0 * static_cast<double>(L)) -
                          static_cast<double>(distinct_prime_divisors(n));
      CHECK(count >= band);
    }
  }
}

TEST_CASE("distinct_prime_divisors") {
  CHECK(distinct_prime_divisors(101) == 1);
  CHECK(distinct_prime_divisors(12) == 2);
  CHECK(distinct_prime_divisors(210) == 4);
  CHECK(distinct_prime_divisors(2) == 1);
  CHECK(distinct_prime_divisors(1024) == 1);
  CHECK(distinct_prime_divisors(999'999'937) == 1);
  CHECK(distinct_prime_divisors(2ull * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23) == 9);
}
