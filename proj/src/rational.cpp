#include "rlct/rational.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "rlct/error.hpp"

namespace rlct {

namespace {

bool all_digits(std::string_view text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveDemand: return "NonPositiveDemand";
    case ErrorCode::NonPositiveBudget: return "NonPositiveBudget";
    case ErrorCode::NegativeRank: return "NegativeRank";
    case ErrorCode::NonIncreasingPrices: return "NonIncreasingPrices";
    case ErrorCode::NegativeInventory: return "NegativeInventory";
    case ErrorCode::ShelfCapExceeded: return "ShelfCapExceeded";
    case ErrorCode::NoIntegerPriceInGap: return "NoIntegerPriceInGap";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::PolynomialWithHiddenUnits: return "PolynomialWithHiddenUnits";
    case ErrorCode::P2RequiresTrueUnits: return "P2RequiresTrueUnits";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::DuplicateMonomials: return "DuplicateMonomials";
    case ErrorCode::NotFoundWithin: return "NotFoundWithin";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidSpecFile: return "InvalidSpecFile";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(Integer(static_cast<long>(numerator)), Integer(static_cast<long>(denominator))) {}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
  if (!all_digits(num_digits) || !all_digits(den)) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  return Rational(Integer(std::string(num)), Integer(std::string(den)));
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  mpf_class approx(value_, 256);
  const int size = gmp_snprintf(nullptr, 0, "%.*Fg", digits, approx.get_mpf_t());
  std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
  gmp_snprintf(buffer.data(), buffer.size(), "%.*Fg", digits, approx.get_mpf_t());
  return std::string(buffer.data(), static_cast<std::size_t>(size));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) {
    throw Error(ErrorCode::InvalidArgument, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace rlct
