#pragma once

// Grid audits behind `circdom audit`. Each function returns one JSON object
// per grid point with a boolean "pass" for the exact invariants it checks.

#include <cstdint>

#include "circdom/construct.hpp"
#include "circdom/expsum.hpp"
#include "circdom/report_json.hpp"

namespace circdom {

/// |W| = L |primes| under L < 0.5 sqrt(n).
Json audit_card(u64 n, u64 L);

/// Exponential-sum scan; also checks max_abs <= |W| and Parseval to 1e-6.
Json audit_expsum(u64 n, u64 L, u64 cap = kDefaultAuditCap, unsigned threads = 0);

/// Paper construction on one random chord set; reports |U| against its envelope.
Json audit_exceptional(u64 n, u64 k, std::uint64_t seed, std::uint64_t trial);

/// Smallest admissible L whose W 2-dominates every trial chord set, plus the
/// constants (c, C, c0) that make the universal construction choose it.
struct Universal2Calibration {
  bool found = false;
  u64 L = 0;
  u64 prime_count = 0;
  double c = 0.0;       // ceil(c X) = L
  double C_sup = 0.0;   // k >= C thr holds for every C <= C_sup
  double c0_sup = 0.0;  // the prime check holds for every c0 < c0_sup
  Dom2Constants passing;

  Json to_json() const;
};

Universal2Calibration calibrate_universal2(u64 n, u64 k, u64 trials, std::uint64_t seed);

/// Representation counts N(u) for `trials` random chord sets of size k.
Json audit_nu(u64 n, u64 k, u64 trials, std::uint64_t seed, const Dom2Constants& constants);

/// Chord set used by trial `trial` of an audit or bench rooted at `seed`.
ChordSet trial_chords(u64 n, u64 k, std::uint64_t seed, std::uint64_t trial);

}  // namespace circdom
