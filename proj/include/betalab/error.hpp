#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace betalab {

enum class ErrorKind {
  NonPositiveInput,
  NonPositiveSample,
  SampleMiss,
  Overflow,
  InvalidGenerator,
  InvalidGrid,
  DegenerateGrid,
  RankDeficient,
  MissingReference,
  ParseError,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace betalab
