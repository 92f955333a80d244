#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commeval {

/// Base class for every data-level failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

class EmptyGraphError : public Error {
public:
    using Error::Error;
};

class InvalidCoverError : public Error {
public:
    using Error::Error;
};

/// The metric is mathematically undefined on this input (e.g. a graph with no edge).
class UndefinedInputError : public Error {
public:
    using Error::Error;
};

/// Two covers do not range over the same node set.
class MismatchError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace commeval
