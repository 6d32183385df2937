#include "circdom/report.hpp"

#include <cmath>

#include "circdom/construct.hpp"
#include "circdom/report_json.hpp"
#include "circdom/rng.hpp"

namespace circdom {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::paper: return "paper";
    case Method::greedy: return "greedy";
    case Method::random: return "random";
    case Method::universal2: return "universal2";
    case Method::almost_w: return "almost-w";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : {Method::paper, Method::greedy, Method::random, Method::universal2, Method::almost_w})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

Json to_json(const DominationReport& report, bool include_timing) {
  Json j;
  j["method"] = std::string(to_string(report.method));
  j["n"] = report.n;
  j["k"] = report.k;
  j["r"] = report.r;
  j["size"] = report.size;
  j["verified"] = report.verified;
  j["uncovered_count"] = report.uncovered_count;
  j["uncovered"] = report.uncovered;
  j["coverage_fraction"] =
      report.n == 0 ? 0.0
                    : static_cast<double>(report.n - report.uncovered_count) / static_cast<double>(report.n);
  j["wall_ms"] = include_timing ? report.wall_ms : 0.0;
  if (report.seed) {
    j["seed"] = *report.seed;
    j["rng"] = std::string(Rng::kName);
  } else {
    j["seed"] = nullptr;
    j["rng"] = nullptr;
  }
  if (report.params) {
    const ConstructionParams& p = *report.params;
    Json params;
    params["L"] = p.L;
    params["prime_count"] = p.prime_count;
    params["w_size"] = p.w_size;
    params["u_size"] = p.u_size;
    params["lambda"] = p.lambda ? Json(*p.lambda) : Json(nullptr);
    params["card_hypothesis"] = p.card_hypothesis;
    j["parameters"] = params;
  } else {
    j["parameters"] = nullptr;
  }
  if (report.n >= kMinConstructN && report.k >= 1) {
    const double env = dominating_envelope(report.n, report.k);
    j["envelope"] = env;
    j["ratio_vs_envelope"] = static_cast<double>(report.size) / env;
  } else {
    j["envelope"] = nullptr;
    j["ratio_vs_envelope"] = nullptr;
  }
  const double dn = static_cast<double>(report.n), dk = static_cast<double>(report.k);
  j["lower_bound_n_over_k_minus_1"] = report.k ? dn / dk - 1.0 : 0.0;
  j["lower_bound_n_over_k_plus_1"] = dn / (dk + 1.0);
  return j;
}

}  // namespace circdom
