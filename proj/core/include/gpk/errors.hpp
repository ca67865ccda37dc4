#pragma once

#include <stdexcept>
#include <string>

namespace gpk {

/// Base class for every error raised by the toolkit. Carries the name of the
/// module that raised it so CLI messages can be tagged.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

class FieldError : public Error {
 public:
  explicit FieldError(const std::string& what) : Error("ffield", what) {}
};

class GeometryError : public Error {
 public:
  explicit GeometryError(const std::string& what) : Error("projective", what) {}
};

class GroupError : public Error {
 public:
  explicit GroupError(const std::string& what) : Error("groups", what) {}
};

class CriterionError : public Error {
 public:
  explicit CriterionError(const std::string& what) : Error("criterion", what) {}
};

class FunctionFieldError : public Error {
 public:
  explicit FunctionFieldError(const std::string& what) : Error("funcfield", what) {}
};

class ConstructError : public Error {
 public:
  explicit ConstructError(const std::string& what) : Error("construct", what) {}
};

}  // namespace gpk
