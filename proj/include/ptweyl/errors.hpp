#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ptweyl/types.hpp"

namespace ptweyl {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Caller supplied parameters that violate a type invariant (mu <= 0, alpha = 0, ...).
class InvalidModel : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

// A profile or potential produced a non-finite value.
class EvaluationError : public Error {
public:
  EvaluationError(const std::string &what, double x)
      : Error(what + " at x = " + std::to_string(x)), x_(x) {}
  double x() const { return x_; }

private:
  double x_;
};

class UnsupportedProfile : public Error {
public:
  using Error::Error;
};

class ZeroModeError : public Error {
public:
  using Error::Error;
};

class BranchRejected : public Error {
public:
  using Error::Error;
};

class SingularQuantization : public Error {
public:
  using Error::Error;
};

class UnsupportedDegree : public Error {
public:
  using Error::Error;
};

// Two independent evaluation routes of the same potential disagree.
class TranscriptionMismatch : public Error {
public:
  TranscriptionMismatch(cplx printed, cplx definitional, double x);
  cplx printed() const { return printed_; }
  cplx definitional() const { return definitional_; }
  double x() const { return x_; }

private:
  cplx printed_;
  cplx definitional_;
  double x_;
};

class SingularVelocity : public Error {
public:
  explicit SingularVelocity(std::vector<double> crossings);
  const std::vector<double> &crossings() const { return crossings_; }

private:
  std::vector<double> crossings_;
};

class NumericFailure : public Error {
public:
  using Error::Error;
};

class DomainTooSmall : public Error {
public:
  using Error::Error;
};

} // namespace ptweyl
