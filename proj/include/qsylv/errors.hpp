#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsylv {

// Shape mismatch in a matrix operation or a system description.
class DimError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A complex matrix handed to the quaternion extraction does not carry the
// adjoint block structure [[A1, A2], [-conj(A2), conj(A1)]].
class StructureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The paired singular values of an embedded matrix straddle the rank
// threshold (odd count above it). Reported so the caller can adjust the
// tolerance; never silently rounded.
class PairingViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solve was requested for an equation or system whose solvability
// conditions fail; the message names the failing condition.
class InconsistentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Equation `index` (1-based) fails its own four solvability conditions,
// so the chain reduction cannot even start.
class PerEquationInconsistent : public InconsistentError {
 public:
  PerEquationInconsistent(std::size_t index_, const std::string& what_)
      : InconsistentError(what_), index(index_) {}
  std::size_t index;
};

// E_i of an eta-Hermitian system is not eta-Hermitian.
class NotEtaHermitianRHS : public std::invalid_argument {
 public:
  NotEtaHermitianRHS(std::size_t index_, const std::string& what_)
      : std::invalid_argument(what_), index(index_) {}
  std::size_t index;
};

// Malformed problem/report/solution file; `path` is a JSON pointer to the
// offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path_, const std::string& detail)
      : std::runtime_error("parse error at " + path_ + ": " + detail),
        path(std::move(path_)) {}
  std::string path;
};

// The oracle linearization would exceed its unknown-count cap.
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qsylv
