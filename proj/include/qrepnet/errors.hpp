#ifndef QREPNET_ERRORS_HPP
#define QREPNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qrepnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A probability argument fell outside [0, 1].
struct InvalidProbabilityError : Error {
    using Error::Error;
};

// A density matrix or state vector failed validation (non-Hermitian,
// trace away from one, negative eigenvalue, non-unit norm).
struct InvalidStateError : Error {
    using Error::Error;
};

// A structural parameter is out of domain (zero edges, empty path, ...).
struct InvalidConfigError : Error {
    using Error::Error;
};

// Mismatched or out-of-range inputs to an otherwise valid object.
struct InvalidInputError : Error {
    using Error::Error;
};

// A size guard was exceeded (lookup table or enumeration too large).
struct CapacityError : Error {
    using Error::Error;
};

// The closed-form waiting-time expression hit a zero denominator.
struct DegenerateFormulaError : Error {
    using Error::Error;
};

// A linear solve or eigendecomposition produced an unusable result.
struct NumericalError : Error {
    using Error::Error;
};

// Zero total latency would make the raw rate infinite.
struct InfiniteRateError : Error {
    using Error::Error;
};

}  // namespace qrepnet

#endif
