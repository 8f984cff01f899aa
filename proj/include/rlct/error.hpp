#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rlct {

enum class ErrorCode {
  NonPositiveDemand,
  NonPositiveBudget,
  NegativeRank,
  NonIncreasingPrices,
  NegativeInventory,
  ShelfCapExceeded,
  NoIntegerPriceInGap,
  InstanceTooLarge,
  PolynomialWithHiddenUnits,
  P2RequiresTrueUnits,
  RankTooLarge,
  InternalInconsistency,
  DuplicateMonomials,
  NotFoundWithin,
  InvalidShape,
  InvalidArgument,
  InvalidSpecFile,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace rlct
