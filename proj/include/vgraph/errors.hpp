#pragma once

#include <stdexcept>
#include <string>

namespace vgraph {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands have incompatible ranks (lattice point vs. instance, weight vector
// vs. rank, and so on).
class DimensionError : public Error {
public:
    using Error::Error;
};

// Input data violates a structural requirement (duplicate points, weights out
// of range, inconsistent documents).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed serialized input; the message carries the position when known.
class ParseError : public Error {
public:
    using Error::Error;
};

class UnsupportedVersionError : public ParseError {
public:
    using ParseError::ParseError;
};

// A configured resource cap was exceeded. For chromatic solves the bounds
// established before giving up are carried along.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& msg, int lower = -1, int upper = -1)
        : Error(msg), lower_bound(lower), upper_bound(upper) {}

    int lower_bound;
    int upper_bound;
};

} // namespace vgraph
