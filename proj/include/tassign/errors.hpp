#pragma once

#include <stdexcept>
#include <string>

namespace tassign {

/// Base class for every fault raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class RankMismatch : public Error {
public:
    using Error::Error;
};

/// Input document does not match the expected JSON shape.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Input is well formed but violates a model invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

class NonGenericXi : public Error {
public:
    using Error::Error;
};

class HypothesisViolation : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class ZeroEulerClass : public Error {
public:
    using Error::Error;
};

class NegativeDefect : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class MissingClasses : public Error {
public:
    using Error::Error;
};

class InvalidMapData : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace tassign
