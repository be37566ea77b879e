#pragma once

#include <stdexcept>
#include <string>

namespace cbsg {

// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};

// Input hull is a point or a segment, not a two-dimensional convex body.
struct NotAConvexBody : Error {
    using Error::Error;
};

// A body vertex (or required region) leaves the closed first quadrant.
struct OutOfQuadrant : Error {
    using Error::Error;
};

// Circle meets the closed quadrant in fewer than two points.
struct NotSimplicial : Error {
    using Error::Error;
};

// The body fails the rational-contact test on some extremal ray.
struct NotAffine : Error {
    using Error::Error;
};

// Valid body, but its contact configuration is outside the supported cases.
struct UnsupportedGeometry : Error {
    using Error::Error;
};

struct Unbounded : Error {
    using Error::Error;
};

struct NoIntersection : Error {
    using Error::Error;
};

struct GenerationFailed : Error {
    using Error::Error;
};

// A runtime consistency assertion failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace cbsg
