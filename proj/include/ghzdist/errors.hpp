#pragma once
#include <stdexcept>
#include <string>

namespace ghzdist {

// base for everything thrown by this library
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed call: bad sizes, bad enum values, empty/full subsets, ...
struct ArgumentError : Error {
    using Error::Error;
};

// a declared numeric contract was violated (non-hermitian, asymmetric,
// non-unitary, non-PSD, norm off, operator not a contraction, ...)
struct ContractError : Error {
    using Error::Error;
};

}  // namespace ghzdist
