#pragma once

#include <stdexcept>
#include <string>

namespace orientdia {

enum class ErrorKind {
  input,               // malformed or out-of-contract user input
  infeasible,          // structurally impossible request (bridge present)
  contract_violation,  // a guaranteed construction failed its own check
  resource,            // search budget exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what) : Error(ErrorKind::infeasible, what) {}
};

class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what)
      : Error(ErrorKind::contract_violation, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorKind::resource, what) {}
};

}  // namespace orientdia
