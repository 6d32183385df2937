#include "circdom/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "circdom/construct.hpp"
#include "circdom/error.hpp"

namespace circdom {

std::complex<double> exp_sum_W(u64 n, const VertexSet& W, u64 a) {
  std::complex<double> total{0.0, 0.0};
  a %= n;
  W.for_each([&](u64 w) { total += e_n(static_cast<i64>(mul_mod(a, w, n)), n); });
  return total;
}

namespace {

// Magnitudes within rounding of each other are ties; the earlier a is kept.
bool beats(double candidate, double incumbent) {
  return candidate > incumbent + 1e-12 * (1.0 + incumbent);
}

struct ScanResult {
  double max_abs = -1.0;
  u64 argmax = 0;
  double sum_sq = 0.0;
};

// Scans a in [begin, end); `members` lists W.
ScanResult scan(u64 n, const std::vector<u64>& members, u64 begin, u64 end) {
  ScanResult res;
  for (u64 a = begin; a < end; ++a) {
    std::complex<double> total{0.0, 0.0};
    for (u64 w : members) total += e_n(static_cast<i64>(mul_mod(a, w, n)), n);
    const double mag = std::abs(total);
    res.sum_sq += std::norm(total);
    if (a != 0 && beats(mag, res.max_abs)) {
      res.max_abs = mag;
      res.argmax = a;
    }
  }
  return res;
}

}  // namespace

ExpSumAudit expsum_audit(u64 n, u64 L, u64 cap, unsigned threads) {
  if (n > cap)
    throw Error(ErrorKind::AuditTooLarge, "n = " + std::to_string(n) + " exceeds the audit cap " +
                                              std::to_string(cap));
  if (n < kMinConstructN)
    throw Error(ErrorKind::DegenerateInstance, "audit needs n >= " + std::to_string(kMinConstructN));

  const WSet W = build_W(n, L);
  const std::vector<u64> members = W.elements.members();

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<u64>(threads, n));
  std::vector<ScanResult> parts(threads);
  std::vector<std::thread> pool;
  const u64 chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const u64 begin = std::min(n, t * chunk), end = std::min(n, begin + chunk);
    pool.emplace_back([&, t, begin, end] { parts[t] = scan(n, members, begin, end); });
  }
  for (auto& th : pool) th.join();

  // Chunks are in increasing a, so a strict > keeps the smallest maximizer.
  ExpSumAudit audit;
  audit.n = n;
  audit.L = L;
  audit.w_size = members.size();
  audit.max_abs = -1.0;
  for (const ScanResult& p : parts) {
    audit.parseval_sum += p.sum_sq;
    if (p.max_abs >= 0 && beats(p.max_abs, audit.max_abs)) {
      audit.max_abs = p.max_abs;
      audit.argmax_a = p.argmax;
    }
  }
  const double l = std::log(static_cast<double>(n));
  audit.bound = static_cast<double>(L) * l * l / std::log(l);
  audit.ratio = audit.max_abs / audit.bound;
  const double expected = static_cast<double>(n) * static_cast<double>(audit.w_size);
  audit.parseval_rel_err = std::abs(audit.parseval_sum - expected) / expected;
  return audit;
}

std::vector<std::pair<u64, i64>> centered_profile(u64 n, u64 a, const PrimeWindow& window) {
  std::vector<std::pair<u64, i64>> out;
  out.reserve(window.size());
  for (u64 l : window.primes) {
    const u64 ratio = mul_mod(a % n, mod_inv(l % n, n), n);
    out.emplace_back(l, centered_residue(static_cast<i64>(ratio), n));
  }
  return out;
}

u64 DyadicCounts::total() const noexcept {
  u64 t = below + lowest_band;
  for (u64 b : bands) t += b;
  return t;
}

DyadicCounts dyadic_histogram(const std::vector<std::pair<u64, i64>>& profile, u64 n, u64 L) {
  const double dn = static_cast<double>(n);
  DyadicCounts out;
  out.I = static_cast<i64>(std::floor(std::log(2 * dn / static_cast<double>(L))));
  out.J = static_cast<i64>(std::floor(std::log(2 * dn)));
  out.bands.assign(static_cast<std::size_t>(std::max<i64>(out.J - out.I, 0)), 0);
  for (const auto& entry : profile) {
    const i64 rho = entry.second;
    const double mag = static_cast<double>(rho < 0 ? -rho : rho);
    if (mag < std::exp(static_cast<double>(out.I))) {
      ++out.below;
      continue;
    }
    const i64 j = std::min(static_cast<i64>(std::floor(std::log(mag))), out.J);
    if (j <= out.I) ++out.lowest_band;
    else ++out.bands[static_cast<std::size_t>(j - out.I - 1)];
  }
  return out;
}

}  // namespace circdom
