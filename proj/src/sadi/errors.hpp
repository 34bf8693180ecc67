#pragma once

#include <stdexcept>
#include <string>

namespace sadi {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched vector dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Argument outside the evaluable range (time, index).
class RangeError : public Error {
public:
    using Error::Error;
};

/// Point outside the domain of an operator or map.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid parameter or violated precondition.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Failure of a user-supplied oracle (including iteration-cap hits).
class OracleError : public Error {
public:
    using Error::Error;
};

/// Violation of an internal invariant; indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// Config-file syntax or validation failure, with the offending line.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace sadi
