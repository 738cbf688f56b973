#pragma once

#include <stdexcept>
#include <string>

namespace flatmod {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FLATMOD_ERROR(Name)              \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

FLATMOD_ERROR(SingularMatrix);
FLATMOD_ERROR(DimensionMismatch);
FLATMOD_ERROR(NonIntegerInput);
FLATMOD_ERROR(DivisionByZero);
FLATMOD_ERROR(NotALattice);
FLATMOD_ERROR(UnknownName);
FLATMOD_ERROR(NoIntegralRepNeeded);
FLATMOD_ERROR(ClosureBudgetExceeded);
FLATMOD_ERROR(NotInHolonomy);
FLATMOD_ERROR(CandidateDoesNotNormalize);
FLATMOD_ERROR(DoesNotPreserveLattice);
FLATMOD_ERROR(EnumerationBudgetExceeded);
FLATMOD_ERROR(NotPositiveDefinite);
FLATMOD_ERROR(NotUnimodular);
FLATMOD_ERROR(IndexBudgetExceeded);
FLATMOD_ERROR(PairingIncomplete);
FLATMOD_ERROR(InconsistentGluing);
FLATMOD_ERROR(ParseError);

#undef FLATMOD_ERROR

}  // namespace flatmod
