#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motivic {

// Root of every error raised by the library. Callers that only need to know
// "the input was rejected" can catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A series is known only modulo its precision floor and the requested answer
// lies below it.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

// A declared dimension bound on a Cauchy sequence or approximant chain is not
// honored by the data.
class BoundViolated : public Error {
public:
    using Error::Error;
};

class InsufficientApproximants : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class IndexMismatch : public Error {
public:
    using Error::Error;
};

class ConstantInput : public Error {
public:
    using Error::Error;
};

class IndeterminateAtCap : public Error {
public:
    using Error::Error;
};

class SingularAmbient : public Error {
public:
    using Error::Error;
};

class BadContact : public Error {
public:
    using Error::Error;
};

class DivergentExponent : public Error {
public:
    using Error::Error;
};

// Structurally invalid value (negative level, bad multiplicity, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace motivic
