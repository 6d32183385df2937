#pragma once

#include <chrono>

namespace circdom {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}

  /// Milliseconds since construction, microsecond resolution.
  double elapsed_ms() const {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start_);
    return static_cast<double>(us.count()) / 1000.0;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace circdom
