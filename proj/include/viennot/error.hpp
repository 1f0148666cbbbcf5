#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace viennot {

enum class ErrorKind {
  MalformedWord,
  MalformedValue,
  DuplicateEntry,
  NotACorner,
  ShapeMismatch,
  NotStandard,
  UnknownStrand,
  StepOutOfRange,
  EmptyDiagram,
  EmptyMatching,
  NotDecreasing,
  MalformedMovie,
  InternalInvariantViolation,
  SizeLimit,
  ParseError,
  IoError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedWord: return "MalformedWord";
    case ErrorKind::MalformedValue: return "MalformedValue";
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::NotACorner: return "NotACorner";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotStandard: return "NotStandard";
    case ErrorKind::UnknownStrand: return "UnknownStrand";
    case ErrorKind::StepOutOfRange: return "StepOutOfRange";
    case ErrorKind::EmptyDiagram: return "EmptyDiagram";
    case ErrorKind::EmptyMatching: return "EmptyMatching";
    case ErrorKind::NotDecreasing: return "NotDecreasing";
    case ErrorKind::MalformedMovie: return "MalformedMovie";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` identifies the contract that
/// was violated; `what()` carries a human-readable message that names the
/// offending position where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace viennot
