#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace izeta {

// Base class for every failure raised by the library. Argument validation
// uses std::invalid_argument directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A function was evaluated outside its domain (e.g. u^2 = 1 in log(1 - u^2)).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A determinant vanished to working precision.
class SingularError : public Error {
 public:
  using Error::Error;
};

// The tridiagonal QL iteration exhausted its budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Exact integer accumulators would overflow.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, int length)
      : Error(what), length_(length) {}
  int length() const noexcept { return length_; }

 private:
  int length_;
};

// log Z was requested on the real branch but the shifted matrix is not
// positive definite.
class NegativeSpectrumError : public Error {
 public:
  NegativeSpectrumError(const std::string& what, std::size_t count)
      : Error(what), count_(count) {}
  std::size_t negative_count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

// Wraps a failure that happened inside one Monte Carlo replica.
class ReplicaError : public Error {
 public:
  ReplicaError(const std::string& what, std::size_t replica)
      : Error(what), replica_(replica) {}
  std::size_t replica() const noexcept { return replica_; }

 private:
  std::size_t replica_;
};

}  // namespace izeta
