#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed map source or literal. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A map, cover or region that parses but violates a structural requirement.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Raised when a point set or cover would grow past the configured cap.
class ResourceCapExceeded : public Error {
public:
    ResourceCapExceeded(const std::string& what, std::size_t cap)
        : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

/// The sweep found a target point that no element contains.
class NotACover : public Error {
public:
    NotACover(double witness)
        : Error("not a cover: point " + std::to_string(witness) + " is uncovered"), witness_(witness) {}

    double witness() const { return witness_; }

private:
    double witness_;
};

}  // namespace pcent
