#pragma once

#include <stdexcept>
#include <string>

namespace twoadic {

/// Base for every error raised by the library on invalid domain input.
class Error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// p is not a prime of the form a^2 + 4 (or not prime at all).
class IneligiblePrime : public Error
{
public:
    using Error::Error;
};

/// g does not generate the multiplicative group mod p.
class NotPrimitiveRoot : public Error
{
public:
    using Error::Error;
};

/// Malformed sequence literal or mismatched sequence shapes.
class SequenceError : public Error
{
public:
    using Error::Error;
};

}  // namespace twoadic
