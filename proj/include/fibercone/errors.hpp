#ifndef FIBERCONE_ERRORS_HPP_
#define FIBERCONE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fibercone {

// Every error raised by the library derives from Error so callers (the CLI in
// particular) can map families of failures onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (bad degrees, alpha out of range...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The facet machinery only exists for c >= d + 4.
class UnsupportedRegimeError : public Error {
 public:
  using Error::Error;
};

class InvalidVertexError : public Error {
 public:
  using Error::Error;
};

// A vertex set handed to an operation that needs a facet is not one.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Inputs are individually fine but mutually inconsistent (facets from two
// different scrolls, an incomplete facet list, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Something the construction guarantees did not hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fibercone

#endif  // FIBERCONE_ERRORS_HPP_
