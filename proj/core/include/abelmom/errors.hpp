#pragma once

#include <stdexcept>
#include <string>

namespace abelmom {

// Exit-code mapping used by the CLI lives in tools/; the library only
// distinguishes error families.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The profile violates the hypotheses the reduction needs
// (g(1) != 1, no index with g != 1, or k not an integer >= 2).
struct InapplicableTheorem : Error {
    using Error::Error;
};

// A requested prime-power exponent exceeds the profile length.
struct ProfileTooShort : Error {
    using Error::Error;
};

// A table/series truncation order is too small for the requested range.
struct TruncationTooShort : Error {
    using Error::Error;
};

// Work or memory beyond the configured budget, or checked integer overflow.
struct CapacityError : Error {
    using Error::Error;
};

struct PoleAtOne : Error {
    using Error::Error;
};

struct UnsupportedDomain : Error {
    using Error::Error;
};

// The requested tolerance cannot be certified with the given parameters.
struct ToleranceUnreachable : Error {
    using Error::Error;
};

// Series passed to the factorizer does not start with coefficient 1.
struct NonUnitSeries : Error {
    using Error::Error;
};

struct UnknownFunction : Error {
    using Error::Error;
};

struct MalformedProfile : Error {
    using Error::Error;
};

struct IllConditionedFit : Error {
    using Error::Error;
};

}  // namespace abelmom
