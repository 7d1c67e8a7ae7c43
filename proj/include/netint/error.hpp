#ifndef NETINT_ERROR_HPP
#define NETINT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace netint {

enum class Errc {
  NotSquare,
  NonFinite,
  NotSymmetric,
  NegativeEntry,
  RowSumViolation,
  InvalidGraph,
  EdgeNotPresent,
  SingularSystem,
  Disconnected,
  NotAFlow,
  BudgetTooLarge,
  TooLarge,
  TooSmall,
  ResampleLimit,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::NonFinite: return "NonFinite";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::RowSumViolation: return "RowSumViolation";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::EdgeNotPresent: return "EdgeNotPresent";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotAFlow: return "NotAFlow";
    case Errc::BudgetTooLarge: return "BudgetTooLarge";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooSmall: return "TooSmall";
    case Errc::ResampleLimit: return "ResampleLimit";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception; `code()`
/// identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace netint

#endif  // NETINT_ERROR_HPP
