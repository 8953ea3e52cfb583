#pragma once

#include <stdexcept>
#include <string>

namespace leaper {

enum class Errc {
  NotReducible,
  NotALeap,
  SelfIntersection,
  WrongClass,
  BoardTooSmall,
  LengthMismatch,
  OverlapError,
  RhombusViolation,
  PreconditionUnmet,
  NotConvex,
  NotFork,
  IterationLimit,
  SharedSlope,
  NotSublattice,
  Degenerate,
  Malformed,
  BudgetExceeded,
};

inline const char* to_string(Errc e) {
  switch (e) {
    case Errc::NotReducible: return "NotReducible";
    case Errc::NotALeap: return "NotALeap";
    case Errc::SelfIntersection: return "SelfIntersection";
    case Errc::WrongClass: return "WrongClass";
    case Errc::BoardTooSmall: return "BoardTooSmall";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::OverlapError: return "OverlapError";
    case Errc::RhombusViolation: return "RhombusViolation";
    case Errc::PreconditionUnmet: return "PreconditionUnmet";
    case Errc::NotConvex: return "NotConvex";
    case Errc::NotFork: return "NotFork";
    case Errc::IterationLimit: return "IterationLimit";
    case Errc::SharedSlope: return "SharedSlope";
    case Errc::NotSublattice: return "NotSublattice";
    case Errc::Degenerate: return "Degenerate";
    case Errc::Malformed: return "Malformed";
    case Errc::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace leaper
