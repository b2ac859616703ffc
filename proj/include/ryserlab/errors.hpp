#pragma once

#include <stdexcept>
#include <string>

namespace ryserlab {

// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAPrimePower : Error {
    explicit NotAPrimePower(long long n)
        : Error("not a prime power: " + std::to_string(n)) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("inverse of zero in a finite field") {}
};

struct SpecMismatch : Error {
    SpecMismatch() : Error("field elements belong to different fields") {}
};

struct ParseError : Error {
    ParseError(int line_no, const std::string& what)
        : Error("parse error at line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
    int line;
};

struct ValidationError : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct PlacementSizeMismatch : Error {
    using Error::Error;
};

struct GadgetNotIntersecting : Error {
    using Error::Error;
};

struct ChainConditionViolated : Error {
    ChainConditionViolated(int idx, const std::string& what)
        : Error("chain condition violated at index " + std::to_string(idx) +
                ": " + what),
          index(idx) {}
    int index;  // 1-based position of the offending chain entry
};

struct RequiresExactCertificates : Error {
    using Error::Error;
};

// A certified optimum below a construction's recorded guarantee means the
// implementation is wrong, not the mathematics. Deliberately not an Error.
struct GuaranteeViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ryserlab
