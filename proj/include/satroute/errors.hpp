#pragma once

#include <stdexcept>
#include <string>

namespace satroute {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Stable machine-readable kind, used by the CLI diagnostics.
  virtual const char* kind() const noexcept { return "error"; }
};

#define SATROUTE_DECLARE_ERROR(Name, Kind)                         \
  class Name : public Error {                                      \
   public:                                                         \
    using Error::Error;                                            \
    const char* kind() const noexcept override { return Kind; }    \
  }

SATROUTE_DECLARE_ERROR(InvalidArgument, "invalid_argument");
SATROUTE_DECLARE_ERROR(SchemaError, "schema_error");
SATROUTE_DECLARE_ERROR(InvariantViolation, "invariant_violation");
SATROUTE_DECLARE_ERROR(NegativeCycle, "negative_cycle");
SATROUTE_DECLARE_ERROR(UnreachableNode, "unreachable_node");
SATROUTE_DECLARE_ERROR(BudgetExceeded, "budget_exceeded");
SATROUTE_DECLARE_ERROR(UnsupportedVariant, "unsupported_variant");

#undef SATROUTE_DECLARE_ERROR

}  // namespace satroute
