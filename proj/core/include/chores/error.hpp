#pragma once

#include <stdexcept>
#include <string>

namespace chores {

/// Base of every error the library raises on bad input. Programming errors
/// (broken internal invariants) surface as std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileError : public Error {
 public:
  using Error::Error;
};

/// Document does not match the instance schema (missing key, wrong shape).
class SchemaError : public Error {
 public:
  using Error::Error;
};

class InstanceError : public Error {
 public:
  enum class Kind { kShape, kEntitlementSum, kNonPositiveEntitlement, kNegativeCost };

  InstanceError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// An exhaustive oracle was asked to run beyond its configured size.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace chores
