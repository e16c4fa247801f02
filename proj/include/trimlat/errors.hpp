#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trimlat {

enum class ErrorKind {
  CycleDetected,
  NotALattice,
  SizeLimitExceeded,
  NotComparable,
  NotACongruence,
  NotExtremal,
  NotTrim,
  NotACover,
  NotSemidistributive,
  ThreeWayMismatch,
  NotDescriptive,
  NotALinearExtension,
  InvalidInput,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotExtremal: return "NotExtremal";
    case ErrorKind::NotTrim: return "NotTrim";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::NotSemidistributive: return "NotSemidistributive";
    case ErrorKind::ThreeWayMismatch: return "ThreeWayMismatch";
    case ErrorKind::NotDescriptive: return "NotDescriptive";
    case ErrorKind::NotALinearExtension: return "NotALinearExtension";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// A pair of elements without a unique meet or join.
class NotALattice : public Error {
public:
  NotALattice(std::size_t x, std::size_t y, const std::string& what)
      : Error(ErrorKind::NotALattice, what), x(x), y(y) {}
  std::size_t x, y;
};

// x1 == x2 in the partition, but x1 op y and x2 op y land in different classes.
class NotACongruence : public Error {
public:
  NotACongruence(std::size_t x1, std::size_t x2, std::size_t y, const std::string& what)
      : Error(ErrorKind::NotACongruence, what), x1(x1), x2(x2), y(y) {}
  std::size_t x1, x2, y;
};

class SizeLimitExceeded : public Error {
public:
  SizeLimitExceeded(std::size_t limit, const std::string& what)
      : Error(ErrorKind::SizeLimitExceeded, what + " (limit " + std::to_string(limit) + ")"), limit(limit) {}
  std::size_t limit;
};

}  // namespace trimlat
