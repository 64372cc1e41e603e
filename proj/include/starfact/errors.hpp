#pragma once

#include <stdexcept>
#include <string>

namespace starfact {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// remove_a_one on a partition with no part equal to 1.
struct MissingPartOne : Error {
    using Error::Error;
};

// An element was handed to a map over {1..n} but carries a larger domain.
struct DomainTooLarge : Error {
    using Error::Error;
};

// alpha_coordinates called on an element that is not S_n-invariant.
struct NotInvariant : Error {
    using Error::Error;
};

struct WeightExceedsN : Error {
    using Error::Error;
};

struct WeightMismatch : Error {
    using Error::Error;
};

struct IndexExceedsN : Error {
    using Error::Error;
};

// Multiplicative inversion of a series with zero constant term.
struct NonInvertibleSeries : Error {
    using Error::Error;
};

struct EmptyPartition : Error {
    using Error::Error;
};

struct OrderExceeded : Error {
    using Error::Error;
};

// Two supposedly equal computation routes disagreed; always a bug.
struct InternalMismatch : Error {
    using Error::Error;
};

// A formula that must produce a nonnegative integer did not.
struct NonIntegerResult : Error {
    using Error::Error;
};

}  // namespace starfact
