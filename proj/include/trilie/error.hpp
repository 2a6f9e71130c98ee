#pragma once

#include <stdexcept>
#include <string>

namespace trilie {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AmbientMismatch : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Spectral failures of simultaneous_eigenspaces.
class NotCommuting : public Error {
public:
    using Error::Error;
};

class NonRationalSpectrum : public Error {
public:
    using Error::Error;
};

class NotDiagonalizable : public Error {
public:
    using Error::Error;
};

// Malformed algebra document (bad JSON, duplicate triple, bad rational, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

// Structure constants that violate the fundamental identity.
class InvalidAlgebra : public Error {
public:
    using Error::Error;
};

class NotAGeneralizedDerivation : public Error {
public:
    using Error::Error;
};

class NotInDelta : public Error {
public:
    using Error::Error;
};

class InvalidPair : public Error {
public:
    using Error::Error;
};

class CenterNotZero : public Error {
public:
    using Error::Error;
};

class InvalidTorus : public Error {
public:
    using Error::Error;
};

class SpaceNotInvariant : public Error {
public:
    using Error::Error;
};

class BlocksNotValid : public Error {
public:
    using Error::Error;
};

} // namespace trilie
