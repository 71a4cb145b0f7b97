#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define TORELLI_ERROR(Name)                 \
    struct Name : Error {                   \
        using Error::Error;                 \
    }

TORELLI_ERROR(PlethysmDivergence);
TORELLI_ERROR(NotAUnit);
TORELLI_ERROR(NonIntegralMultiplicity);
TORELLI_ERROR(EpsilonMismatch);
TORELLI_ERROR(ValuationViolation);
TORELLI_ERROR(IndexOutOfRange);
TORELLI_ERROR(IllegalContraction);
TORELLI_ERROR(GroundSetOverlap);
TORELLI_ERROR(ForbiddenResult);
TORELLI_ERROR(NonTrivalentInput);
TORELLI_ERROR(InvalidGraph);
TORELLI_ERROR(NotPerfect);
TORELLI_ERROR(NegativeMultiplicity);
TORELLI_ERROR(Unsupported);
TORELLI_ERROR(ConfigError);
TORELLI_ERROR(TensorTooLarge);

#undef TORELLI_ERROR

}  // namespace torelli
