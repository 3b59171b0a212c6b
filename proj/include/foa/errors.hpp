#pragma once

#include <stdexcept>
#include <string>

namespace foa {

// Geometry that makes the requested quantity undefined: coincident
// cameras, a target on the camera line, or a collinear point triple.
class DegenerateGeometry : public std::runtime_error {
 public:
  explicit DegenerateGeometry(const std::string& what)
      : std::runtime_error(what) {}
};

// Numeric parameter outside its documented domain.
class InvalidRange : public std::runtime_error {
 public:
  explicit InvalidRange(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive search requested beyond the configured size cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  explicit InstanceTooLarge(const std::string& what)
      : std::runtime_error(what) {}
};

// Bucket count maps that violate their feasibility constraints.
class ConstraintViolated : public std::runtime_error {
 public:
  explicit ConstraintViolated(const std::string& what)
      : std::runtime_error(what) {}
};

// Input rejected by instance validation (solver precondition gates,
// malformed instance files).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace foa
