#pragma once

#include <stdexcept>
#include <string>

namespace polignac {

// A request that would exceed the configured sieve ceiling.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed census / tuple / integer-set text.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace polignac
