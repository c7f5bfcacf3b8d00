#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cama {

/// Base for every error the library reports about its inputs.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A malformed record in an input file.
class ParseError : public Error {
public:
    ParseError(std::string file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)),
          line_(line) {}

    [[nodiscard]] const std::string& file() const noexcept { return file_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

/// Well-formed input that violates a data invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Invalid parameters passed to an operation.
class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace cama
