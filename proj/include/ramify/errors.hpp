#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramify {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ReducibleModulus : public Error {
 public:
  ReducibleModulus(std::string msg, std::vector<unsigned> factor)
      : Error(std::move(msg)), factor(std::move(factor)) {}
  std::vector<unsigned> factor;
};

class NotEisenstein : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

// Raised when a certified answer would need more p-adic digits than the
// working precision carries. `needed` is a lower bound in ground digits.
class InsufficientPrecision : public Error {
 public:
  InsufficientPrecision(std::string msg, long needed = 0)
      : Error(std::move(msg)), needed(needed) {}
  long needed;
};

class NotGalois : public Error {
 public:
  NotGalois(std::string msg, int roots_found, int degree)
      : Error(std::move(msg)), roots_found(roots_found), degree(degree) {}
  int roots_found;
  int degree;
};

class GeneratorFailure : public Error {
 public:
  GeneratorFailure(std::string msg, long index_valuation)
      : Error(std::move(msg)), index_valuation(index_valuation) {}
  long index_valuation;
};

class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(std::string msg, double size)
      : Error(std::move(msg)), size(size) {}
  double size;
};

class SchemaError : public Error {
 public:
  SchemaError(std::string msg, std::string pointer)
      : Error(std::move(msg)), pointer(std::move(pointer)) {}
  std::string pointer;
};

class IdentityFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace ramify
