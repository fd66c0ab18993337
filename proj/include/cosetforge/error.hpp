#pragma once

#include <stdexcept>
#include <string>

namespace cosetforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its fixed work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class MinDistanceTooSmall : public Error {
 public:
  using Error::Error;
};

class NonIntegralSolution : public Error {
 public:
  using Error::Error;
};

class NotUniformlyPacked : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

class NotDistanceRegular : public Error {
 public:
  NotDistanceRegular(const std::string& what, unsigned u, unsigned v, unsigned distance)
      : Error(what), u_(u), v_(v), distance_(distance) {}
  unsigned u() const noexcept { return u_; }
  unsigned v() const noexcept { return v_; }
  unsigned distance() const noexcept { return distance_; }

 private:
  unsigned u_, v_, distance_;
};

class NotStronglyRegular : public Error {
 public:
  using Error::Error;
};

class NotAScheme : public Error {
 public:
  using Error::Error;
};

class NotAStabilizer : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class UnclassifiedSubgraph : public Error {
 public:
  using Error::Error;
};

}  // namespace cosetforge
