#pragma once

#include "circdom/graph.hpp"
#include "circdom/report.hpp"
#include "circdom/vertex_set.hpp"

namespace circdom {

struct DominationCheck {
  bool dominating = false;
  VertexSet uncovered;
};

DominationCheck is_dominating(const CirculantSpec& spec, const VertexSet& D, unsigned r);

/// Fills verified / uncovered fields of `report` from a check of report.D at report.r.
void verify_report(const CirculantSpec& spec, DominationReport& report);

inline constexpr u64 kExactGammaMaxN = 24;

/// Exact domination number by increasing-cardinality subset search.
/// Throws Error{TooLarge} for n > 24.
u64 exact_gamma(const CirculantSpec& spec);

/// n/k - 1
double gamma_lower_bound(u64 n, u64 k);

}  // namespace circdom
