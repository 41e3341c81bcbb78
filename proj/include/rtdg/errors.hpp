#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtdg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point was used with an operation for a different space family,
/// or two points from different spaces were combined.
struct SpaceMismatchError : Error {
    using Error::Error;
};

/// A point whose coordinates violate the space invariants.
struct InvalidPointError : Error {
    using Error::Error;
};

/// A distance value outside dist(space), or a malformed distance list.
struct InvalidDistanceError : Error {
    using Error::Error;
};

/// Enumeration or evaluation would exceed the configured point limit.
struct SizeLimitError : Error {
    using Error::Error;
};

/// Malformed textual input (space spec, distance list, expression).
struct ParseError : Error {
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), pos(position) {}
    explicit ParseError(const std::string& message) : Error(message), pos(0) {}
    std::size_t pos;
};

/// A degree value with no distance-set preimage.
struct NoPreimageError : Error {
    using Error::Error;
};

} // namespace rtdg
