#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace laby {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arrows whose domains/codomains do not line up, malformed mazes, bad shapes.
class DomainError : public Error {
public:
    using Error::Error;
};

// An enumeration would exceed the configured item bound.
class EnumerationLimit : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Internal consistency failure: a value that must be integral was not.
class IntegralityViolation : public Error {
public:
    using Error::Error;
};

inline constexpr std::size_t kDefaultEnumerationLimit = std::size_t{1} << 20;

inline void check_enumeration(std::size_t count, std::size_t limit, const char* what) {
    if (count > limit)
        throw EnumerationLimit(std::string(what) + ": more than " + std::to_string(limit) + " items");
}

}  // namespace laby
