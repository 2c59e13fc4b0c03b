#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ehpo {

// Base class for all toolkit errors. Commands map these to exit code 1,
// configuration/usage problems to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid experiment configuration or unresolved reference.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Formula syntax error; carries the byte offset of the failure.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// File I/O or record-level deserialization failure; line is 1-based, 0 if
// the error is not tied to a specific line.
class IoError : public Error {
public:
    explicit IoError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace ehpo
