#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circdom {

enum class ErrorKind {
  NotInvertible,
  InvalidChord,
  EmptyPrimeWindow,
  DegenerateInstance,
  HypothesisNotMet,
  TooLarge,
  AuditTooLarge,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace circdom
