#pragma once

// The modular-ratio construction W = { k / l mod n : 1 <= k <= L, l prime in
// [L+1, 2L], gcd(l, n) = 1 } and the dominating sets built from it.

#include <cstdint>
#include <vector>

#include "circdom/arith.hpp"
#include "circdom/graph.hpp"
#include "circdom/primes.hpp"
#include "circdom/report.hpp"
#include "circdom/vertex_set.hpp"

namespace circdom {

struct WSet {
  VertexSet elements;
  PrimeWindow window;

  u64 L() const noexcept { return window.L; }
  u64 size() const noexcept { return elements.size(); }
  /// L * |primes|: the size before any coincidences are merged.
  u64 pair_count() const noexcept { return window.L * window.size(); }
  /// L < 0.5 sqrt(n), under which every pair gives a distinct element.
  bool card_hypothesis() const noexcept { return card_hypothesis_holds(window.n, window.L); }

  static bool card_hypothesis_holds(u64 n, u64 L) noexcept {
    return static_cast<u128>(4) * L * L < n;
  }
};

struct LambdaSolution {
  double lambda = 0.0;
  u64 L = 0;
  /// |lhs - rhs| / rhs of the balancing equation at `lambda`.
  double residual = 0.0;
};

/// Smallest n accepted by the constructions (ln ln n > 0 with margin).
inline constexpr u64 kMinConstructN = 16;

/// Solves n^2 (ln λ)^2 (ln n)^4 / (k λ^2 (ln ln n)^2) = λ^2 / ln λ by bisection
/// on the monotone form λ^4 / (ln λ)^3 = n^2 (ln n)^4 / (k (ln ln n)^2).
LambdaSolution solve_lambda(u64 n, u64 k);

/// Relative defect of the balancing equation at `lambda`.
double lambda_residual(u64 n, u64 k, double lambda);

/// Throws Error{EmptyPrimeWindow} when no prime in [L+1, 2L] is coprime to n.
WSet build_W(u64 n, u64 L);

/// Z_n minus (S + W), by marking w + s for every pair.
VertexSet exceptional_set(u64 n, const ChordSet& S, const VertexSet& W);

/// D = U ∪ W with L = ceil(λ). The report is verified at radius 1.
DominationReport construct_dominating(const CirculantSpec& spec);

struct Dom2Constants {
  double c = 1.0;   // scale of L
  double C = 1.0;   // lower threshold on k
  double c0 = 1.0;  // prime-count check
};

/// Every quantity the universal 2-domination construction checks, computed
/// without throwing.
struct Universal2Plan {
  u64 n = 0;
  u64 k = 0;
  Dom2Constants constants;
  double L_real = 0.0;  // c n (ln n)^3 / (k ln ln n)
  u64 L = 0;
  double k_threshold = 0.0;  // C sqrt(n) (ln n)^3 / ln ln n
  bool k_hypothesis = false;
  bool card_hypothesis = false;
  u64 prime_count = 0;
  double prime_threshold = 0.0;  // c0 n (ln n)^2 / (k ln ln n)
  bool prime_check = false;

  bool ok() const noexcept { return k_hypothesis && card_hypothesis && prime_check; }
};

Universal2Plan plan_universal_2dom(u64 n, u64 k, const Dom2Constants& constants);

/// The chord-independent set W. Throws Error{HypothesisNotMet} when any of the
/// plan's checks fail.
WSet construct_universal_2dom(u64 n, u64 k, const Dom2Constants& constants);

/// #{(s, t, w) in S x S x W : s + t + w = u (mod n)}, by an O(k^2) loop.
u64 count_representations(u64 n, const ChordSet& S, const VertexSet& W, u64 u);

/// N(u) for every u, from the histogram of S + S shifted by each w.
std::vector<u64> representation_counts(u64 n, const ChordSet& S, const VertexSet& W);

/// psi n (ln n)^3 / (sqrt(k) ln ln n)
double almost_budget(u64 n, u64 k, double psi);

/// build_W(n, L*) where L* is found by doubling then bisection so that
/// L* |primes(L*)| fits the almost-domination budget.
WSet almost_dominating_W(u64 n, u64 k, double psi);

// Size envelopes, natural logarithms throughout.

/// n (ln n)^{5/2} / (sqrt(k) ln ln n)
double dominating_envelope(u64 n, u64 k);
/// n^2 (ln n)^4 / (|S| |primes|^2 (ln ln n)^2)
double exceptional_envelope(u64 n, u64 s_size, u64 prime_count);
/// n^2 (ln n)^5 / (k^2 (ln ln n)^2)
double universal2_envelope(u64 n, u64 k);

}  // namespace circdom
