// Exception taxonomy shared across the library.
//
// ClassViolation marks inputs outside the supported curve class, and maps
// to its own process exit code in the command line tool. The other two
// separate golden-value mismatches from floating point breakdowns.

#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

// Input fails the structural assumptions (quadratic in l, palindromic
// squarefree quartic discriminant, involution acting as -id).
class ClassViolation : public std::domain_error {
 public:
  explicit ClassViolation(const std::string& what) : std::domain_error(what) {}
};

// A computed value disagrees with a pinned reference value.
class VerificationMismatch : public std::runtime_error {
 public:
  explicit VerificationMismatch(const std::string& what)
      : std::runtime_error(what) {}
};

// A floating point routine lost too much accuracy to certify its result.
class NumericFailure : public std::runtime_error {
 public:
  explicit NumericFailure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace spectral
