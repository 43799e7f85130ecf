#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quasiline {

enum class ErrorKind {
  // incidence_core
  DegreeTooLow,
  UnknownId,
  DuplicateId,
  ParseError,
  // perm_sequences
  IndexOutOfRange,
  BadElement,
  InvalidMove,
  NotDisjoint,
  // realization
  PlanMismatch,
  // wiring
  InvalidDiagram,
  NotGeneralized,
  DuplicateLine,
  UnresolvableChart,
  InvalidInput,
  CyclicInput,
  NotAdmissible,
  NoSuchFace,
  HasDigons,
  NotTwoConnected,
  // surface_map
  WireWithoutPoint,
  InvalidScheme,
  Disconnected,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the text and JSON readers; positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace quasiline
