#include "circdom/arith.hpp"

#include <numbers>
#include <string>

#include "circdom/error.hpp"

namespace circdom {

u64 gcd(u64 a, u64 b) noexcept {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 mod_inv(u64 a, u64 n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "mod_inv: modulus must be >= 2");
  a %= n;
  // Invariant: old_s * a == old_r (mod n), s * a == r (mod n).
  i64 old_r = static_cast<i64>(a), r = static_cast<i64>(n);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw Error(ErrorKind::NotInvertible,
                std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  }
  return reduce(old_s, n);
}

i64 centered_residue(i64 u, u64 n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "centered_residue: modulus must be >= 3");
  const u64 r = reduce(u, n);
  // r in [0, n); values above n/2 wrap to the negative side.
  return 2 * r > n ? static_cast<i64>(r) - static_cast<i64>(n) : static_cast<i64>(r);
}

std::complex<double> e_n(i64 z, u64 n) {
  const u64 r = reduce(z, n);
  const double c = 2 * r > n ? static_cast<double>(static_cast<i64>(r) - static_cast<i64>(n))
                             : static_cast<double>(r);
  const double theta = 2.0 * std::numbers::pi * c / static_cast<double>(n);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace circdom
