#pragma once

// Modular arithmetic on Z_n with 64-bit residues and 128-bit products.

#include <complex>
#include <cstdint>

namespace circdom {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ using u128 = unsigned __int128;

u64 gcd(u64 a, u64 b) noexcept;

inline u64 mul_mod(u64 a, u64 b, u64 n) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % n);
}

inline u64 add_mod(u64 a, u64 b, u64 n) noexcept {
  // a, b < n <= 2^62, so the sum cannot overflow.
  const u64 s = a + b;
  return s >= n ? s - n : s;
}

/// Least nonnegative residue of a signed integer.
inline u64 reduce(i64 u, u64 n) noexcept {
  const i64 m = static_cast<i64>(n);
  const i64 r = u % m;
  return static_cast<u64>(r < 0 ? r + m : r);
}

/// Inverse of `a` modulo `n` by the extended Euclidean algorithm.
/// Throws Error{NotInvertible} when gcd(a, n) > 1.
u64 mod_inv(u64 a, u64 n);

/// The representative of u mod n in (-n/2, n/2]. Requires n >= 3.
i64 centered_residue(i64 u, u64 n);

/// exp(2*pi*i*z/n). The angle is taken from the centered residue of z so
/// large z loses no precision.
std::complex<double> e_n(i64 z, u64 n);

}  // namespace circdom
