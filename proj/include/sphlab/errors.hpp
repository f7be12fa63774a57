#pragma once

#include <stdexcept>
#include <string>

namespace sphlab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A matrix that was required to lie in SL_n has determinant != 1.
struct NonUnimodularError : Error {
    using Error::Error;
};

// Two values built over different (p, n) contexts were combined.
struct ContextMismatchError : Error {
    using Error::Error;
};

// A coweight failed to be dominant or to sum to zero.
struct InvalidCoweightError : Error {
    using Error::Error;
};

// An integer exponent vector handed to a character did not sum to zero.
struct BadCoweightSumError : Error {
    using Error::Error;
};

// An enumeration would exceed a configured cap.
struct ResourceLimitError : Error {
    using Error::Error;
};

// Vector/matrix sizes disagree.
struct DimensionMismatchError : Error {
    using Error::Error;
};

// A matrix expected to be Hermitian within tolerance is not.
struct NonHermitianError : Error {
    using Error::Error;
};

// A coefficient required to be an exact rational is not.
struct InexactCoefficientError : Error {
    using Error::Error;
};

// A construction needs a larger rank n than the context provides.
struct RankTooSmallError : Error {
    using Error::Error;
};

// Malformed JSON payloads or CLI arguments.
struct SchemaError : Error {
    using Error::Error;
};

// An internal invariant failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace sphlab
