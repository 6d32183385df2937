#include "circdom/construct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circdom/error.hpp"
#include "circdom/timer.hpp"
#include "circdom/verify.hpp"

namespace circdom {
namespace {

void require_construct_n(u64 n) {
  if (n < kMinConstructN)
    throw Error(ErrorKind::DegenerateInstance,
                "n = " + std::to_string(n) + " is below the minimum " + std::to_string(kMinConstructN));
}

double ln(u64 x) { return std::log(static_cast<double>(x)); }
double lnln(u64 x) { return std::log(std::log(static_cast<double>(x))); }

}  // namespace

double lambda_residual(u64 n, u64 k, double lambda) {
  const double ll = std::log(lambda);
  const double lhs = std::pow(static_cast<double>(n), 2) * ll * ll * std::pow(ln(n), 4) /
                     (static_cast<double>(k) * lambda * lambda * std::pow(lnln(n), 2));
  const double rhs = lambda * lambda / ll;
  return std::abs(lhs - rhs) / rhs;
}

LambdaSolution solve_lambda(u64 n, u64 k) {
  require_construct_n(n);
  if (k < 1 || k >= n) throw Error(ErrorKind::InvalidArgument, "solve_lambda needs 1 <= k < n");

  // Work in logs: g(x) = 4x - 3 ln x with x = ln λ, target = ln(rhs).
  const double target = 2 * ln(n) + 4 * std::log(ln(n)) - ln(k) - 2 * std::log(lnln(n));
  auto g = [](double lam) { return 4 * std::log(lam) - 3 * std::log(std::log(lam)); };

  double lo = std::pow(static_cast<double>(n), 0.25);
  double hi = static_cast<double>(n);
  // Tiny n with few chords puts the root above n.
  while (g(hi) < target) hi *= 2;

  LambdaSolution sol;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) < target) lo = mid;
    else hi = mid;
    if ((hi - lo) <= 1e-9 * lo && lambda_residual(n, k, 0.5 * (lo + hi)) <= 1e-12) break;
  }
  sol.lambda = 0.5 * (lo + hi);
  sol.residual = lambda_residual(n, k, sol.lambda);
  sol.L = static_cast<u64>(std::ceil(sol.lambda));
  return sol;
}

WSet build_W(u64 n, u64 L) {
  if (L < 1) throw Error(ErrorKind::InvalidArgument, "build_W needs L >= 1");
  WSet w{VertexSet(n), primes_in_window(L, n)};
  if (w.window.empty())
    throw Error(ErrorKind::EmptyPrimeWindow, "no prime in [" + std::to_string(L + 1) + ", " +
                                                 std::to_string(2 * L) + "] is coprime to " +
                                                 std::to_string(n));
  // k/l for k = 1..L by repeated addition of l^{-1}; k beyond n only repeats.
  const u64 steps = std::min(L, n);
  // Four progressions stepped together so their cache misses overlap.
  constexpr std::size_t kLanes = 4;
  const auto& primes = w.window.primes;
  std::size_t p = 0;
  for (; p + kLanes <= primes.size(); p += kLanes) {
    u64 inv[kLanes], x[kLanes] = {};
    for (std::size_t i = 0; i < kLanes; ++i) inv[i] = mod_inv(primes[p + i] % n, n);
    for (u64 j = 0; j < steps; ++j) {
      for (std::size_t i = 0; i < kLanes; ++i) {
        x[i] = add_mod(x[i], inv[i], n);
        w.elements.mark(x[i]);
      }
    }
  }
  for (; p < primes.size(); ++p) {
    const u64 inv = mod_inv(primes[p] % n, n);
    u64 x = 0;
    for (u64 j = 0; j < steps; ++j) {
      x = add_mod(x, inv, n);
      w.elements.mark(x);
    }
  }
  w.elements.recount();
  return w;
}

VertexSet exceptional_set(u64 n, const ChordSet& S, const VertexSet& W) {
  if (S.empty()) throw Error(ErrorKind::InvalidArgument, "exceptional_set needs a nonempty chord set");
  // v is exceptional when no v - s lies in W; dense W exits on the first chord.
  VertexSet U(n);
  const auto chords = S.values();
  for (u64 v = 0; v < n; ++v) {
    bool hit = false;
    for (u64 s : chords) {
      if (W.contains(v >= s ? v - s : v + n - s)) {
        hit = true;
        break;
      }
    }
    if (!hit) U.insert(v);
  }
  return U;
}

DominationReport construct_dominating(const CirculantSpec& spec) {
  require_construct_n(spec.n);
  Stopwatch clock;
  const u64 n = spec.n;
  const LambdaSolution sol = solve_lambda(n, spec.k());

  // Empty-window retry: double L while 2L < 0.5 sqrt(n), at most three times.
  u64 L = sol.L;
  PrimeWindow window = primes_in_window(L, n);
  for (int doubling = 0; window.empty() && doubling < 3; ++doubling) {
    if (!WSet::card_hypothesis_holds(n, 2 * L)) break;
    L *= 2;
    window = primes_in_window(L, n);
  }
  if (window.empty())
    throw Error(ErrorKind::EmptyPrimeWindow,
                "prime window stayed empty after retries (L = " + std::to_string(L) + ")");

  WSet W = build_W(n, L);
  VertexSet U = exceptional_set(n, spec.chords, W.elements);

  DominationReport report;
  report.method = Method::paper;
  report.n = n;
  report.k = spec.k();
  report.r = 1;
  report.params = ConstructionParams{L, W.window.size(), W.size(), U.size(), sol.lambda,
                                     W.card_hypothesis()};
  report.D = std::move(W.elements);
  report.D |= U;
  report.size = report.D.size();
  report.wall_ms = clock.elapsed_ms();
  verify_report(spec, report);
  return report;
}

Universal2Plan plan_universal_2dom(u64 n, u64 k, const Dom2Constants& constants) {
  require_construct_n(n);
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
  Universal2Plan plan;
  plan.n = n;
  plan.k = k;
  plan.constants = constants;
  const double dn = static_cast<double>(n), dk = static_cast<double>(k);
  const double l = ln(n), ll = lnln(n);

  plan.L_real = constants.c * dn * l * l * l / (dk * ll);
  plan.L = static_cast<u64>(std::max(1.0, std::ceil(plan.L_real)));
  plan.k_threshold = constants.C * std::sqrt(dn) * l * l * l / ll;
  plan.k_hypothesis = k <= n && dk >= plan.k_threshold;
  plan.card_hypothesis = WSet::card_hypothesis_holds(n, plan.L);
  plan.prime_threshold = constants.c0 * dn * l * l / (dk * ll);
  // The window is only sieved when L is admissible; otherwise L can be huge.
  if (plan.card_hypothesis) plan.prime_count = primes_in_window(plan.L, n).size();
  plan.prime_check = static_cast<double>(plan.prime_count) > plan.prime_threshold;
  return plan;
}

WSet construct_universal_2dom(u64 n, u64 k, const Dom2Constants& constants) {
  const Universal2Plan plan = plan_universal_2dom(n, k, constants);
  if (!plan.k_hypothesis)
    throw Error(ErrorKind::HypothesisNotMet,
                "k = " + std::to_string(k) + " is below C sqrt(n) (ln n)^3 / ln ln n = " +
                    std::to_string(plan.k_threshold));
  if (!plan.card_hypothesis)
    throw Error(ErrorKind::HypothesisNotMet,
                "L = " + std::to_string(plan.L) + " is not below 0.5 sqrt(n)");
  if (!plan.prime_check)
    throw Error(ErrorKind::HypothesisNotMet,
                "prime count " + std::to_string(plan.prime_count) +
                    " does not exceed c0 n (ln n)^2 / (k ln ln n) = " +
                    std::to_string(plan.prime_threshold));
  return build_W(n, plan.L);
}

u64 count_representations(u64 n, const ChordSet& S, const VertexSet& W, u64 u) {
  u64 count = 0;
  u %= n;
  for (u64 s : S) {
    const u64 us = (u + n - s) % n;
    for (u64 t : S) {
      if (W.contains((us + n - t) % n)) ++count;
    }
  }
  return count;
}

std::vector<u64> representation_counts(u64 n, const ChordSet& S, const VertexSet& W) {
  std::vector<u64> pair_sums(n, 0);
  for (u64 s : S)
    for (u64 t : S) ++pair_sums[add_mod(s, t, n)];
  std::vector<u64> counts(n, 0);
  W.for_each([&](u64 w) {
    // counts[v + w] += pair_sums[v], split to avoid a modulo per element.
    const u64 head = n - w;
    for (u64 v = 0; v < head; ++v) counts[v + w] += pair_sums[v];
    for (u64 v = head; v < n; ++v) counts[v - head] += pair_sums[v];
  });
  return counts;
}

double almost_budget(u64 n, u64 k, double psi) {
  const double l = ln(n);
  return psi * static_cast<double>(n) * l * l * l / (std::sqrt(static_cast<double>(k)) * lnln(n));
}

WSet almost_dominating_W(u64 n, u64 k, double psi) {
  require_construct_n(n);
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
  if (!(psi > 0)) throw Error(ErrorKind::InvalidArgument, "psi must be positive");
  const double budget = almost_budget(n, k, psi);
  if (budget < 1) throw Error(ErrorKind::InvalidArgument, "almost-domination budget is below 1");

  auto fits = [&](u64 L) {
    return static_cast<double>(L) * static_cast<double>(primes_in_window(L, n).size()) <= budget;
  };
  u64 lo = 1;  // fits(1): at most one prime in [2, 2]
  u64 hi = 2;
  while (hi <= n && fits(hi)) {
    lo = hi;
    hi *= 2;
  }
  if (hi > n) {
    if (fits(n)) lo = n;
    hi = std::min(hi, n + 1);
  }
  while (hi - lo > 1) {
    const u64 mid = lo + (hi - lo) / 2;
    if (fits(mid)) lo = mid;
    else hi = mid;
  }
  return build_W(n, lo);
}

double dominating_envelope(u64 n, u64 k) {
  return static_cast<double>(n) * std::pow(ln(n), 2.5) / (std::sqrt(static_cast<double>(k)) * lnln(n));
}

double exceptional_envelope(u64 n, u64 s_size, u64 prime_count) {
  const double dn = static_cast<double>(n), p = static_cast<double>(prime_count);
  return dn * dn * std::pow(ln(n), 4) / (static_cast<double>(s_size) * p * p * std::pow(lnln(n), 2));
}

double universal2_envelope(u64 n, u64 k) {
  const double dn = static_cast<double>(n), dk = static_cast<double>(k);
  return dn * dn * std::pow(ln(n), 5) / (dk * dk * std::pow(lnln(n), 2));
}

}  // namespace circdom
