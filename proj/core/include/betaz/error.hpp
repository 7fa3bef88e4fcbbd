#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace betaz {

/// Base class of every error raised by the library. `kind()` is the stable
/// machine-readable tag used by the CLI's JSON error objects.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed constructor input: bad residue index, non-positive modulus,
/// vanishing denominator, violated preconditions of a certificate.
class ValidationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

/// The operation is not defined for this value.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// A direction point is too coarse to decide the query.
class RefinePointError : public DomainError {
 public:
  RefinePointError(const std::string& what, std::int64_t required_modulus)
      : DomainError(what), required_modulus_(required_modulus) {}
  const char* kind() const noexcept override { return "refine_point"; }
  std::int64_t required_modulus() const noexcept { return required_modulus_; }

 private:
  std::int64_t required_modulus_;
};

/// A family of sets whose intersection is empty where it must not be.
/// `witness()` lists the indices of a subfamily with empty intersection.
class InconsistentError : public DomainError {
 public:
  InconsistentError(const std::string& what, std::vector<std::size_t> witness)
      : DomainError(what), witness_(std::move(witness)) {}
  const char* kind() const noexcept override { return "inconsistent"; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

}  // namespace betaz
