#pragma once

#include <stdexcept>
#include <string>

namespace cutquad {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside its documented range.
class ParameterError : public Error
{
public:
    using Error::Error;
};

/// An integrand or level-set evaluation produced a non-finite value.
class EvaluationError : public Error
{
public:
    using Error::Error;
};

/// Degenerate or inconsistent geometry (collinear triangle, open chain, ...).
class GeometryError : public Error
{
public:
    using Error::Error;
};

/// Polynomial coefficients left the representable range.
class NumericRangeError : public Error
{
public:
    using Error::Error;
};

/// A depth or point-count guard was exceeded.
class ResourceError : public Error
{
public:
    using Error::Error;
};

/// A rule generator could not produce a rule for the given input.
class MethodFailure : public Error
{
public:
    using Error::Error;
};

/// The interface normal is undefined because the gradient vanished.
class DegenerateNormalError : public MethodFailure
{
public:
    using MethodFailure::MethodFailure;
};

class UnsupportedCaseError : public Error
{
public:
    using Error::Error;
};

class InsufficientDataError : public Error
{
public:
    using Error::Error;
};

class IoError : public Error
{
public:
    using Error::Error;
};

} // namespace cutquad
