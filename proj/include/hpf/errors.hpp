#pragma once

#include <stdexcept>
#include <string>

namespace hpf {

// Invalid argument or broken precondition (bad dimensions, malformed input).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatchError : public ValidationError {
public:
    explicit DimensionMismatchError(const std::string& what) : ValidationError(what) {}
};

// A configured budget (term count, basis size) would be exceeded.  Carries
// the bound that was computed so callers can report it.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::string computed_bound)
        : std::runtime_error(what), bound_(std::move(computed_bound)) {}
    const std::string& computed_bound() const { return bound_; }

private:
    std::string bound_;
};

// Text format error; line numbers are 1-based, 0 means "not line specific".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? ("line " + std::to_string(line) + ": " + what) : what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hpf
