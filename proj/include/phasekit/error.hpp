#pragma once

#include <stdexcept>
#include <string>

namespace phasekit {

// Base of every failure raised by the library. Callers that only need a
// message can catch this; the CLI maps the concrete types to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CutoffTooSmall : public Error {
 public:
  CutoffTooSmall(const std::string& what, int suggested_cutoff)
      : Error(what), suggested_cutoff_(suggested_cutoff) {}
  // Smallest cutoff expected to be adequate, or -1 when not applicable.
  int suggested_cutoff() const noexcept { return suggested_cutoff_; }

 private:
  int suggested_cutoff_;
};

class DegenerateSuperposition : public Error {
 public:
  using Error::Error;
};

class CutoffMismatch : public Error {
 public:
  using Error::Error;
};

class KernelInconsistency : public Error {
 public:
  using Error::Error;
};

class QuadratureConstruction : public Error {
 public:
  using Error::Error;
};

// The alternating triple sum behind the Wigner phase operator lost too many
// digits to cancellation; the matrix is not trustworthy at this cutoff.
class CancellationOverflow : public Error {
 public:
  CancellationOverflow(const std::string& what, int row, int col,
                       double deviation, long term_count)
      : Error(what), row_(row), col_(col), deviation_(deviation),
        term_count_(term_count) {}
  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }
  double deviation() const noexcept { return deviation_; }
  long term_count() const noexcept { return term_count_; }

 private:
  int row_;
  int col_;
  double deviation_;
  long term_count_;
};

class PathUnavailable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace phasekit
