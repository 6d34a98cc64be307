#pragma once

#include <stdexcept>
#include <string>

namespace binet {

/// Base class for all domain errors thrown by this library. Usage errors
/// (bad arguments that violate documented preconditions) throw
/// std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Binary operation on two surds over different radicands.
class RadicandMismatch : public Error {
public:
    using Error::Error;
};

/// Division by an exact zero.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A^2 + 4B <= 0: no two distinct real characteristic roots.
class NonPositiveDiscriminant : public Error {
public:
    using Error::Error;
};

/// A closed-form evaluation failed to collapse to a rational. Unreachable
/// for closed forms produced by solve(); indicates an arithmetic bug.
class IrrationalResidue : public Error {
public:
    using Error::Error;
};

/// Root data whose elementary symmetric functions (or starting terms) are
/// not rational, so no rational recurrence exists.
class IrrationalCoefficients : public Error {
public:
    using Error::Error;
};

/// The coefficient on the dominant root is zero; the ratio limit claim
/// does not apply.
class ZeroDominantCoefficient : public Error {
public:
    using Error::Error;
};

/// A term used as a denominator is exactly zero.
class ZeroTerm : public Error {
public:
    using Error::Error;
};

/// Index outside an operation's documented range.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Index 0 of the triple chain yields the degenerate (0, 1, 1); rejected
/// unless explicitly permitted.
class DegenerateIndex : public Error {
public:
    using Error::Error;
};

}  // namespace binet
