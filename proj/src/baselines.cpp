#include "circdom/baselines.hpp"

#include <cmath>
#include <vector>

#include "circdom/rng.hpp"
#include "circdom/timer.hpp"
#include "circdom/verify.hpp"

namespace circdom {
namespace {

DominationReport make_report(const CirculantSpec& spec, Method method, VertexSet D) {
  DominationReport report;
  report.method = method;
  report.n = spec.n;
  report.k = spec.k();
  report.r = 1;
  report.size = D.size();
  report.D = std::move(D);
  return report;
}

}  // namespace

DominationReport greedy_dominating(const CirculantSpec& spec) {
  Stopwatch clock;
  const u64 n = spec.n;
  const auto chords = spec.chords.values();

  // gain[v] = uncovered vertices in {v} ∪ (v + S); kept exact as vertices get covered.
  std::vector<u64> gain(n, spec.k() + 1);
  VertexSet covered(n);
  VertexSet D(n);
  auto cover = [&](u64 x) {
    if (!covered.insert(x)) return;
    --gain[x];
    for (u64 s : chords) --gain[(x + n - s) % n];
  };

  while (!covered.is_full()) {
    u64 best = 0;
    for (u64 v = 1; v < n; ++v)
      if (gain[v] > gain[best]) best = v;
    D.insert(best);
    cover(best);
    for (u64 s : chords) cover(add_mod(best, s, n));
  }

  DominationReport report = make_report(spec, Method::greedy, std::move(D));
  report.wall_ms = clock.elapsed_ms();
  verify_report(spec, report);
  return report;
}

DominationReport random_dominating(const CirculantSpec& spec, std::uint64_t seed) {
  Stopwatch clock;
  const u64 n = spec.n;
  Rng rng(seed);
  VertexSet covered(n);
  VertexSet D(n);
  while (!covered.is_full()) {
    const u64 v = rng.below(n);
    if (!D.insert(v)) continue;
    covered.insert(v);
    for (u64 s : spec.chords) covered.insert(add_mod(v, s, n));
  }
  DominationReport report = make_report(spec, Method::random, std::move(D));
  report.seed = seed;
  report.wall_ms = clock.elapsed_ms();
  verify_report(spec, report);
  return report;
}

double greedy_size_bound(u64 n, u64 k) {
  return (std::log(static_cast<double>(k) + 2.0) + 1.0) * static_cast<double>(n) /
         (static_cast<double>(k) + 1.0);
}

}  // namespace circdom
