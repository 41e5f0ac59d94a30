#pragma once

// Exception hierarchy shared by every module. Each failure mode that callers
// may want to distinguish gets its own type; all derive from qtl::Error.

#include <stdexcept>
#include <string>

namespace qtl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Params failed validation; what() names the violated condition.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

class SplitImpossible : public Error {
 public:
  using Error::Error;
};

class SingularPoint : public Error {
 public:
  using Error::Error;
};

class NotInOrbit : public Error {
 public:
  using Error::Error;
};

class NotAGalleryCrossing : public Error {
 public:
  using Error::Error;
};

class NotOnHyperplane : public Error {
 public:
  using Error::Error;
};

class ClosureBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class NotAGallery : public Error {
 public:
  using Error::Error;
};

class NoRegularMember : public Error {
 public:
  using Error::Error;
};

/// Two independent computation routes disagreed.
class InternalMismatch : public Error {
 public:
  using Error::Error;
};

class NotLevelTwo : public Error {
 public:
  using Error::Error;
};

class RankTooHigh : public Error {
 public:
  using Error::Error;
};

}  // namespace qtl
