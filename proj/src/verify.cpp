#include "circdom/verify.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "circdom/error.hpp"

namespace circdom {

DominationCheck is_dominating(const CirculantSpec& spec, const VertexSet& D, unsigned r) {
  VertexSet covered = coverage(spec, D, r);
  const bool ok = covered.is_full();
  return {ok, covered.complement()};
}

void verify_report(const CirculantSpec& spec, DominationReport& report) {
  const DominationCheck check = is_dominating(spec, report.D, report.r);
  report.verified = check.dominating;
  report.uncovered_count = check.uncovered.size();
  report.uncovered.clear();
  check.uncovered.for_each([&](u64 v) {
    if (report.uncovered.size() < DominationReport::kUncoveredListCap) report.uncovered.push_back(v);
  });
}

namespace {

struct SubsetSearch {
  u64 n;
  u64 full;
  u64 max_gain;
  std::vector<u64> closed;  // closed[v] = {v} ∪ (v + S) as a bitmask

  // Picks `left` more vertices from [from, n) on top of `cover`.
  bool extend(u64 cover, u64 from, u64 left) const {
    if (cover == full) return true;
    if (left == 0) return false;
    if (static_cast<u64>(std::popcount(cover)) + left * max_gain < n) return false;
    for (u64 v = from; v + left <= n; ++v) {
      if (extend(cover | closed[v], v + 1, left - 1)) return true;
    }
    return false;
  }
};

}  // namespace

u64 exact_gamma(const CirculantSpec& spec) {
  const u64 n = spec.n;
  if (n > kExactGammaMaxN)
    throw Error(ErrorKind::TooLarge, "exact_gamma is limited to n <= " +
                                         std::to_string(kExactGammaMaxN) + " (got " +
                                         std::to_string(n) + ")");
  SubsetSearch search{n, (u64{1} << n) - 1, spec.k() + 1, std::vector<u64>(n, 0)};
  for (u64 v = 0; v < n; ++v) {
    u64 mask = u64{1} << v;
    for (u64 s : spec.chords) mask |= u64{1} << ((v + s) % n);
    search.closed[v] = mask;
  }
  // Rotations are automorphisms, so some minimum dominating set contains 0.
  for (u64 size = (n + spec.k()) / (spec.k() + 1); size <= n; ++size) {
    if (search.extend(search.closed[0], 1, size - 1)) return size;
  }
  return n;  // unreachable: Z_n dominates
}

double gamma_lower_bound(u64 n, u64 k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
  return static_cast<double>(n) / static_cast<double>(k) - 1.0;
}

}  // namespace circdom
