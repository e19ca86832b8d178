#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cofocus {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file (bad framing, bad field, duplicate id). Carries the
/// 1-based line number when one is known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Bad configuration supplied by the user (synonym map conflicts, invalid
/// simulation parameters, out-of-range options).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Input data that parses but cannot be processed (empty graph, missing
/// component, undefined statistic).
class DataError : public Error {
public:
    using Error::Error;
};

} // namespace cofocus
