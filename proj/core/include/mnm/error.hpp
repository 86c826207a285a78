#pragma once

#include <stdexcept>
#include <string>

namespace mnm {

// Precondition or argument-domain violation (bad k, probability out of range, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured resource limit (state-count cap) would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A series could not certify its tail bound within the iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file (CSV, b-file).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mnm
