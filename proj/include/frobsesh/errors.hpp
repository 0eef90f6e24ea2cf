#pragma once

#include <stdexcept>
#include <string>

namespace frobsesh {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    using Error::Error;
};
struct NotUnimodular : Error {
    using Error::Error;
};
struct MalformedFan : Error {
    using Error::Error;
};
struct FanMismatch : Error {
    using Error::Error;
};
struct NotAVertex : Error {
    using Error::Error;
};
struct NotNef : Error {
    using Error::Error;
};
struct NotAmple : Error {
    using Error::Error;
};
struct UnboundedPolytope : Error {
    using Error::Error;
};
struct NotNormalized : Error {
    using Error::Error;
};
struct InvalidPrime : Error {
    using Error::Error;
};
struct NoWitness : Error {
    using Error::Error;
};
struct SizeLimit : Error {
    using Error::Error;
};
struct CapTooSmall : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};
struct FanInvalid : Error {
    using Error::Error;
};
struct DimensionUnsupported : Error {
    using Error::Error;
};

} // namespace frobsesh
