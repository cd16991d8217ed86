#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cposet {

enum class ErrorKind {
  // construction
  EmptyPoset,
  TooLarge,
  InvalidName,
  DuplicateName,
  UnknownName,
  CycleDetected,
  // complementation
  NotBounded,
  PartialMap,
  DuplicateAssignment,
  AxiomViolation,
  // enumeration and separation inputs
  ScaleLimit,
  NotIdeal,
  NotFilter,
  // generators
  BadSize,
  // text formats
  SyntaxError,
  DuplicateSection,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyPoset: return "EmptyPoset";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidName: return "InvalidName";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::PartialMap: return "PartialMap";
    case ErrorKind::DuplicateAssignment: return "DuplicateAssignment";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::ScaleLimit: return "ScaleLimit";
    case ErrorKind::NotIdeal: return "NotIdeal";
    case ErrorKind::NotFilter: return "NotFilter";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DuplicateSection: return "DuplicateSection";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(format(kind, what, line)), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  static std::string format(ErrorKind kind, const std::string& what, std::optional<std::size_t> line) {
    std::string out(to_string(kind));
    if (line) out += " (line " + std::to_string(*line) + ")";
    out += ": ";
    out += what;
    return out;
  }

  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace cposet
