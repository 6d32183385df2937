#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circdom/arith.hpp"
#include "circdom/vertex_set.hpp"

namespace circdom {

enum class Method { paper, greedy, random, universal2, almost_w };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// Construction parameters; absent for methods that have none.
struct ConstructionParams {
  u64 L = 0;
  u64 prime_count = 0;
  u64 w_size = 0;
  u64 u_size = 0;
  std::optional<double> lambda;
  bool card_hypothesis = false;
};

struct DominationReport {
  static constexpr std::size_t kUncoveredListCap = 1000;

  Method method = Method::paper;
  u64 n = 0;
  u64 k = 0;
  unsigned r = 1;
  VertexSet D;
  u64 size = 0;
  bool verified = false;
  u64 uncovered_count = 0;
  /// First kUncoveredListCap uncovered vertices, ascending.
  std::vector<u64> uncovered;
  double wall_ms = 0.0;
  std::optional<ConstructionParams> params;
  std::optional<std::uint64_t> seed;
};

}  // namespace circdom
