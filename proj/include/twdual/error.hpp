#pragma once

#include <stdexcept>
#include <string>

namespace twdual {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain.
class DomainError : public Error {
  public:
    using Error::Error;
};

// A mathematical invariant failed to hold. Never expected for valid input.
class InternalError : public Error {
  public:
    using Error::Error;
};

inline void ensure(bool cond, const std::string &what) {
    if (!cond)
        throw InternalError(what);
}

inline void require(bool cond, const std::string &what) {
    if (!cond)
        throw DomainError(what);
}

} // namespace twdual
