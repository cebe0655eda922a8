#pragma once

#include <stdexcept>
#include <string>

namespace wittforge {

/// A mathematical precondition was violated (zero scalar, wrong dimension,
/// form outside I^2, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A bounded search ran out of budget. This is never a mathematical "no".
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed external input (JSON, CLI arguments).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A cross-check that should hold unconditionally failed.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace wittforge
