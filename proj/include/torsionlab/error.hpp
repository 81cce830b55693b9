#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torsionlab {

enum class ErrorKind {
  NonConfluent,
  VariableOutOfRange,
  RingMismatch,
  NotMonomialMode,
  UnitIdeal,
  PatternError,
  UnknownTag,
  InvalidRule,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonConfluent: return "NonConfluent";
    case ErrorKind::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotMonomialMode: return "NotMonomialMode";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::PatternError: return "PatternError";
    case ErrorKind::UnknownTag: return "UnknownTag";
    case ErrorKind::InvalidRule: return "InvalidRule";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every library failure is reported through this type; `kind()` carries the
/// machine-readable category.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace torsionlab
