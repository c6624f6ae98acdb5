#pragma once

#include <stdexcept>
#include <string>

namespace ffvc {

// Rejected input: bad parameters, violated preconditions, malformed files.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text that does not match a documented format.
class ParseError : public ValidationError {
public:
    explicit ParseError(const std::string& msg) : ValidationError(msg) {}
};

// A work estimate or explored-star budget was exceeded.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& msg, unsigned long long estimate)
        : std::runtime_error(msg), estimate(estimate) {}
    unsigned long long estimate;
};

// An invariant the library guarantees was observed to fail. Always a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace ffvc
