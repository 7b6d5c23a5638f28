#pragma once

#include <stdexcept>
#include <string>

namespace gksum {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvertible : Error {
    using Error::Error;
};
struct NotAUnit : Error {
    using Error::Error;
};
struct NotPrimePower : Error {
    using Error::Error;
};
struct OrderDoesNotDivide : Error {
    using Error::Error;
};
struct NotAResidue : Error {
    using Error::Error;
};
struct NotCoprime : Error {
    using Error::Error;
};
struct InvalidParity : Error {
    using Error::Error;
};
struct DividesAB : Error {
    using Error::Error;
};
struct WrongResidueClass : Error {
    using Error::Error;
};
struct BadForm : Error {
    using Error::Error;
};
struct Overflow : Error {
    using Error::Error;
};
struct ZeroVector : Error {
    using Error::Error;
};
struct NotOnTorus : Error {
    using Error::Error;
};
struct EmptyGrid : Error {
    using Error::Error;
};
struct IoFailure : Error {
    using Error::Error;
};

}  // namespace gksum
