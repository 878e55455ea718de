#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plc {

// Argument outside the mathematical domain of a function, e.g. Γ(0,0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Invalid model or algorithm parameter (θ ≤ 0, eps ≤ 0, empty grid).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Caller broke a documented precondition (unsorted times, ∞ − ∞, ...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The model does not expose what was asked for (e.g. a partial derivative).
class UnsupportedModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    IoError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}

    // 1-based line number, 0 when not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace plc
