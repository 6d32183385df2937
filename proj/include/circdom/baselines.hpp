#pragma once

#include <cstdint>

#include "circdom/graph.hpp"
#include "circdom/report.hpp"

namespace circdom {

/// Greedy cover by closed neighbourhoods u ∪ (u + S); largest gain first,
/// ties to the smallest vertex.
DominationReport greedy_dominating(const CirculantSpec& spec);

/// Uniform draws with replacement until every vertex is covered.
DominationReport random_dominating(const CirculantSpec& spec, std::uint64_t seed);

/// (ln(k + 2) + 1) n / (k + 1)
double greedy_size_bound(u64 n, u64 k);

}  // namespace circdom
