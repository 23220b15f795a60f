#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace mubcoh {

namespace detail {

inline std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace detail

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSquare : public Error {
 public:
  NotSquare() : Error("matrix is not square") {}
};

class NotHermitian : public Error {
 public:
  explicit NotHermitian(double max_asymmetry)
      : Error("matrix is not Hermitian: max |m - adjoint(m)| = " +
              detail::fmt_real(max_asymmetry)),
        max_asymmetry_(max_asymmetry) {}
  double max_asymmetry() const { return max_asymmetry_; }

 private:
  double max_asymmetry_;
};

class TraceMismatch : public Error {
 public:
  explicit TraceMismatch(double trace)
      : Error("trace is " + detail::fmt_real(trace) + ", expected 1"), trace_(trace) {}
  double trace() const { return trace_; }

 private:
  double trace_;
};

class NotPositive : public Error {
 public:
  explicit NotPositive(double min_eigenvalue)
      : Error("matrix is not positive semidefinite: min eigenvalue = " +
              detail::fmt_real(min_eigenvalue)),
        min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class NoConvergence : public Error {
 public:
  NoConvergence() : Error("eigensolver failed to converge") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};

class BlochNormExceeded : public Error {
 public:
  explicit BlochNormExceeded(double norm_squared)
      : Error("Bloch vector lies outside the unit ball: |r|^2 = " +
              detail::fmt_real(norm_squared)),
        norm_squared_(norm_squared) {}
  double norm_squared() const { return norm_squared_; }

 private:
  double norm_squared_;
};

class InvalidBasis : public Error {
 public:
  using Error::Error;
};

class EmptyLevelSet : public Error {
 public:
  explicit EmptyLevelSet(double level)
      : Error("level " + detail::fmt_real(level) + " produces an empty isosurface"),
        level_(level) {}
  double level() const { return level_; }

 private:
  double level_;
};

class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace mubcoh
