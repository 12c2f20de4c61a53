#ifndef CORPUSCOPE_ERRORS_HPP
#define CORPUSCOPE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace corpuscope {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    explicit ParseError(const std::string& message) : Error(message), line_(0) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Invalid argument, violated precondition, or unusable input data.
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace corpuscope

#endif
