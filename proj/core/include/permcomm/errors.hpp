#pragma once

#include <stdexcept>
#include <string>

namespace permcomm {

// Base for every domain error. kind() is the stable, machine-readable name
// that the CLI prints verbatim; what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string &what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string &kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define PERMCOMM_ERROR_TYPE(Name)                                              \
  struct Name : Error {                                                        \
    explicit Name(const std::string &what) : Error(#Name, what) {}             \
  }

PERMCOMM_ERROR_TYPE(SyntaxError);
PERMCOMM_ERROR_TYPE(PointOutOfRange);
PERMCOMM_ERROR_TYPE(RepeatedPointInCycle);
PERMCOMM_ERROR_TYPE(DegreeMismatch);
PERMCOMM_ERROR_TYPE(InvalidWindow);
PERMCOMM_ERROR_TYPE(NotTransitive);
PERMCOMM_ERROR_TYPE(PreconditionViolated);
PERMCOMM_ERROR_TYPE(OrderCapExceeded);
PERMCOMM_ERROR_TYPE(NotEvenPermutation);
PERMCOMM_ERROR_TYPE(SearchExhausted);
PERMCOMM_ERROR_TYPE(LengthMismatch);
PERMCOMM_ERROR_TYPE(InsufficientSupport);
PERMCOMM_ERROR_TYPE(UnsupportedDegree);
PERMCOMM_ERROR_TYPE(InvalidMinPart);
PERMCOMM_ERROR_TYPE(ParityContradiction);
PERMCOMM_ERROR_TYPE(InvalidRatio);
PERMCOMM_ERROR_TYPE(OutOfStatedRange);
PERMCOMM_ERROR_TYPE(SearchBudgetExceeded);
PERMCOMM_ERROR_TYPE(Refused);

#undef PERMCOMM_ERROR_TYPE

} // namespace permcomm
