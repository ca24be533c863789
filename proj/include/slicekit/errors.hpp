#pragma once

#include <stdexcept>
#include <string>

namespace slicekit {

// Error taxonomy mirrors the exit-code contract of the tools:
//   usage / capacity problems  -> exit 2
//   violated mathematical claim -> exit 1 (an invariant that is provably true
//                                  failed; either a bug or a falsified claim)
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : Error {
    using Error::Error;
};

struct CapacityError : UsageError {
    using UsageError::UsageError;
};

struct ClaimError : Error {
    using Error::Error;
};

}  // namespace slicekit
