#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isospec {

enum class Errc {
  CapExceeded,
  NotASubgroup,
  OrderMismatch,
  NotSymmetric,
  NoIntertwiner,
  ShapeMismatch,
  BudgetExceeded,
  NotPositiveDefinite,
  Degenerate,
  NotPrime,
  UnknownName,
  ZeroDiscriminant,
  RamifiedPrime,
  InsufficientCensus,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NoIntertwiner: return "NoIntertwiner";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::Degenerate: return "Degenerate";
    case Errc::NotPrime: return "NotPrime";
    case Errc::UnknownName: return "UnknownName";
    case Errc::ZeroDiscriminant: return "ZeroDiscriminant";
    case Errc::RamifiedPrime: return "RamifiedPrime";
    case Errc::InsufficientCensus: return "InsufficientCensus";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above. Internal consistency violations use std::logic_error.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace isospec
