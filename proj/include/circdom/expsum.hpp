#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "circdom/arith.hpp"
#include "circdom/primes.hpp"
#include "circdom/vertex_set.hpp"

namespace circdom {

/// sum over w in W of e_n(a w), summed term by term.
std::complex<double> exp_sum_W(u64 n, const VertexSet& W, u64 a);

struct ExpSumAudit {
  u64 n = 0;
  u64 L = 0;
  u64 w_size = 0;
  double max_abs = 0.0;  // over a != 0
  u64 argmax_a = 0;      // smallest a attaining max_abs
  double bound = 0.0;    // L (ln n)^2 / ln ln n
  double ratio = 0.0;
  double parseval_sum = 0.0;      // sum over all a of |S(a)|^2
  double parseval_rel_err = 0.0;  // against n |W|
};

inline constexpr u64 kDefaultAuditCap = u64{1} << 14;

/// Scans every nonzero a, including those sharing a factor with n.
/// Throws Error{AuditTooLarge} when n > cap, Error{DegenerateInstance} when n < 16.
ExpSumAudit expsum_audit(u64 n, u64 L, u64 cap = kDefaultAuditCap, unsigned threads = 0);

/// (l, centered residue of a / l mod n) for every prime l of the window.
std::vector<std::pair<u64, i64>> centered_profile(u64 n, u64 a, const PrimeWindow& window);

/// Counts of |rho| with I = floor(ln(2n/L)) and J = floor(ln 2n).
struct DyadicCounts {
  i64 I = 0;
  i64 J = 0;
  u64 below = 0;            // |rho| < e^I
  u64 lowest_band = 0;      // e^I <= |rho| < e^{I+1}
  std::vector<u64> bands;   // bands[j - I - 1]: e^j <= |rho| < e^{j+1}, j = I+1..J

  u64 total() const noexcept;
};

DyadicCounts dyadic_histogram(const std::vector<std::pair<u64, i64>>& profile, u64 n, u64 L);

}  // namespace circdom
