#pragma once

#include <stdexcept>
#include <string>

namespace cliffwave {

// Parameter or input outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical procedure (quadrature, root bracketing, front search) did not
// reach its target.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// psi * reverse(psi) vanishes, so no polar form exists.
class SingularSpinorError : public DomainError {
 public:
  explicit SingularSpinorError(const std::string& what) : DomainError(what) {}
};

}  // namespace cliffwave
