#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace estk {

// Root of every failure the library raises, so front ends can map error
// categories to exit codes in one place.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (expressions, rational literals, series literals).
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position(position) {}
  std::size_t position;
};

// Division by an exact zero.  When raised during coefficient evaluation the
// (n, k) site is recorded.
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what)
      : Error(what), has_site(false), n(0), k(0) {}
  DivisionByZero(const std::string& what, long n, long k)
      : Error(what), has_site(true), n(n), k(k) {}
  bool has_site;
  long n;
  long k;
};

// series
struct ZeroConstantTerm : Error { using Error::Error; };
struct NonzeroInnerConstant : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct BadConstantTerm : Error { using Error::Error; };

// riordan
struct IndexOutOfRange : Error { using Error::Error; };
struct OrderTooSmall : Error { using Error::Error; };
struct FlavorMismatch : Error { using Error::Error; };
struct SequenceTooShort : Error { using Error::Error; };
struct DegenerateMatrix : Error { using Error::Error; };

// seidel
struct ClassMismatch : Error { using Error::Error; };
struct InsufficientFinalData : Error { using Error::Error; };

// transforms
struct BadParameters : Error { using Error::Error; };
struct NonVerifiable : Error { using Error::Error; };

}  // namespace estk
