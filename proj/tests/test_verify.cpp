#include <doctest.h>

#include <bit>
#include <cmath>
#include <vector>

#include "circdom/error.hpp"
#include "circdom/verify.hpp"

using namespace circdom;

namespace {

// Minimum over every subset of Z_n, no pruning or symmetry reduction.
u64 gamma_by_enumeration(const CirculantSpec& spec) {
  const u64 n = spec.n;
  std::vector<u64> closed(n);
  for (u64 v = 0; v < n; ++v) {
    closed[v] = u64{1} << v;
    for (u64 s : spec.chords) closed[v] |= u64{1} << ((v + s) % n);
  }
  const u64 full = (u64{1} << n) - 1;
  u64 best = n;
  for (u64 mask = 1; mask <= full; ++mask) {
    const u64 size = static_cast<u64>(std::popcount(mask));
    if (size >= best) continue;
    u64 cov = 0;
    for (u64 m = mask; m; m &= m - 1) cov |= closed[static_cast<u64>(std::countr_zero(m))];
    if (cov == full) best = size;
  }
  return best;
}

}  // namespace

TEST_CASE("is_dominating examples") {
  const CirculantSpec c4(4, ChordSet({1}, 4));
  CHECK(is_dominating(c4, VertexSet::full(4), 1).dominating);
  CHECK(is_dominating(c4, VertexSet::full(4), 1).uncovered.empty());
  CHECK(is_dominating(c4, VertexSet::from(4, std::vector<u64>{0, 2}), 1).dominating);
  const DominationCheck miss = is_dominating(c4, VertexSet::from(4, std::vector<u64>{0}), 1);
  CHECK_FALSE(miss.dominating);
  CHECK(miss.uncovered.members() == std::vector<u64>{2, 3});
}

TEST_CASE("is_dominating agrees with a per-vertex scan") {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const u64 n = 2 + rng.below(1000);
    const u64 k = 1 + rng.below(std::min<u64>(n - 1, 12));
    const CirculantSpec spec(n, random_chords(n, k, rng));
    VertexSet D(n);
    const u64 picks = rng.below(n / (k + 1) + 3);
    for (u64 i = 0; i < picks; ++i) D.insert(rng.below(n));
    bool expect = true;
    for (u64 v = 0; v < n && expect; ++v) {
      bool hit = false;
      D.for_each([&](u64 d) {
        if (d == v) hit = true;
        for (u64 s : spec.chords) hit = hit || (d + s) % n == v;
      });
      expect = hit;
    }
    CHECK(is_dominating(spec, D, 1).dominating == expect);
  }
}

TEST_CASE("uncovered listing is capped in reports but counted exactly") {
  const CirculantSpec spec(5000, ChordSet({1}, 5000));
  DominationReport r;
  r.n = 5000;
  r.k = 1;
  r.D = VertexSet::from(5000, std::vector<u64>{0});
  verify_report(spec, r);
  CHECK_FALSE(r.verified);
  CHECK(r.uncovered_count == 4998);
  CHECK(r.uncovered.size() == DominationReport::kUncoveredListCap);
  CHECK(r.uncovered.front() == 2);
}

TEST_CASE("exact_gamma examples") {
  CHECK(exact_gamma(CirculantSpec(3, ChordSet({1, 2}, 3))) == 1);
  CHECK(exact_gamma(CirculantSpec(4, ChordSet({1}, 4))) == 2);
  CHECK(exact_gamma(CirculantSpec(9, ChordSet({1, 8}, 9))) == 3);
  try {
    exact_gamma(CirculantSpec(25, ChordSet({1}, 25)));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("exact_gamma matches full subset enumeration") {
  Rng rng(42);
  for (int t = 0; t < 150; ++t) {
    const u64 n = 2 + rng.below(15);
    const u64 k = 1 + rng.below(n - 1);
    const CirculantSpec spec(n, random_chords(n, k, rng));
    const u64 g = exact_gamma(spec);
    CHECK(g == gamma_by_enumeration(spec));
    CHECK(static_cast<double>(g) >= static_cast<double>(n) / static_cast<double>(k + 1));
  }
  // Worst case for the search: the directed 24-cycle.
  CHECK(exact_gamma(CirculantSpec(24, ChordSet({1}, 24))) == 12);
}

TEST_CASE("gamma_lower_bound") {
  CHECK(gamma_lower_bound(9, 2) == doctest::Approx(3.5));
  for (u64 n : {3u, 10u, 1000u}) {
    const double b = gamma_lower_bound(n, n - 1);
    CHECK(b > 0.0);
    CHECK(b < 1.0);
  }
}
