#pragma once

#include <stdexcept>
#include <string>

namespace levyarea {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define LEVYAREA_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// process / exponent
LEVYAREA_DEFINE_ERROR(InvalidParameter);
LEVYAREA_DEFINE_ERROR(MeanDriftViolation);
LEVYAREA_DEFINE_ERROR(MissingJumpDist);
LEVYAREA_DEFINE_ERROR(DomainError);
LEVYAREA_DEFINE_ERROR(ConvergenceFailure);

// series
LEVYAREA_DEFINE_ERROR(NonInvertible);

// area
LEVYAREA_DEFINE_ERROR(QuadratureFailure);
LEVYAREA_DEFINE_ERROR(DegenerateFunction);
LEVYAREA_DEFINE_ERROR(OrderViolation);
LEVYAREA_DEFINE_ERROR(LevelsNotIncreasing);

// sim
LEVYAREA_DEFINE_ERROR(HorizonExceeded);
LEVYAREA_DEFINE_ERROR(HorizonTooShort);
LEVYAREA_DEFINE_ERROR(UnsupportedProcess);

// inventory
LEVYAREA_DEFINE_ERROR(UnboundedUpstream);
LEVYAREA_DEFINE_ERROR(BadProportions);

// configuration
LEVYAREA_DEFINE_ERROR(ConfigError);

#undef LEVYAREA_DEFINE_ERROR

} // namespace levyarea
