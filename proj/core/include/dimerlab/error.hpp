#pragma once

#include <stdexcept>
#include <string>

namespace dimerlab {

// All library failures carry a short machine-readable code ("EulerCharacteristic",
// "NoOrientation", ...) alongside the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Syntax problem in an input file; line numbers are 1-based.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("SyntaxError", "line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// An input object violates a structural invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace dimerlab
