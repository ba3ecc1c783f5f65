#pragma once

#include <stdexcept>
#include <string>

namespace ptb {

// All library errors carry a stable kind tag that the CLI reports verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define PTB_ERROR(Name)                                                  \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(#Name, what) {}       \
  }

PTB_ERROR(TruncationExceeded);
PTB_ERROR(NonTerminating);
PTB_ERROR(RingMismatch);
PTB_ERROR(ZeroClass);
PTB_ERROR(ScopeViolation);
PTB_ERROR(InfiniteLocus);
PTB_ERROR(DegreeBudgetExceeded);
PTB_ERROR(NonpositiveT);
PTB_ERROR(NotTangent);
PTB_ERROR(NotOrthonormal);
PTB_ERROR(EigenFailure);
PTB_ERROR(WeightNotIntegral);
PTB_ERROR(UnsupportedFactor);
PTB_ERROR(NonpositiveAlpha);
PTB_ERROR(SphereTooSmall);

#undef PTB_ERROR

}  // namespace ptb
