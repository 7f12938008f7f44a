#pragma once

#include <stdexcept>
#include <string>

namespace ellr {

// Input outside the admissible region of an operation (bad modulus, strip, zone, ordering).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidModulus : public DomainError {
 public:
  using DomainError::DomainError;
};

class NearPole : public DomainError {
 public:
  enum class Where { argument, lambda };
  NearPole(Where where, const std::string& what) : DomainError(what), where_(where) {}
  Where where() const noexcept { return where_; }

 private:
  Where where_;
};

// Series hit its term cap before reaching the requested tolerance.
class TruncationOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A truncated Laurent product cannot certify the requested coefficient.
class WindowInsufficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite sample on a contour, or a quadrature that does not settle under node doubling.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ellr
