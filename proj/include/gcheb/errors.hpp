#pragma once

#include <stdexcept>
#include <string>

namespace gcheb {

// Precondition violated by the caller (bad parameter, out-of-range lambda).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Coefficient data that cannot come from a Jacobi operator of the requested shape.
class AdmissibilityError : public DomainError {
 public:
  explicit AdmissibilityError(const std::string& what) : DomainError(what) {}
};

// Evaluation hit a singular energy, a pole or a vanishing determinant.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class PoleError : public NumericalError {
 public:
  explicit PoleError(const std::string& what) : NumericalError(what) {}
};

class ConvergenceError : public NumericalError {
 public:
  explicit ConvergenceError(const std::string& what) : NumericalError(what) {}
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail
}  // namespace gcheb
