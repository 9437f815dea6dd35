#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace urbanrom {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line (text) or byte offset (binary).
class FormatError : public Error {
 public:
  FormatError(const std::string& what, long location)
      : Error(what + " (at " + std::to_string(location) + ")"), location_(location) {}
  long location() const { return location_; }

 private:
  long location_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, std::vector<long> offending = {})
      : Error(what), offending_(std::move(offending)) {}
  const std::vector<long>& offending() const { return offending_; }

 private:
  std::vector<long> offending_;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

class AssemblyError : public Error {
 public:
  AssemblyError(const std::string& what, long cell) : Error(what), cell_(cell) {}
  long cell() const { return cell_; }

 private:
  long cell_;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double last_residual, int iterations)
      : Error(what), last_residual_(last_residual), iterations_(iterations) {}
  double last_residual() const { return last_residual_; }
  int iterations() const { return iterations_; }

 private:
  double last_residual_;
  int iterations_;
};

class SolverError : public Error {
 public:
  explicit SolverError(const std::string& what, long step = -1) : Error(what), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

// Requested basis size exceeds what the data supports.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, int attainable) : Error(what), attainable_(attainable) {}
  int attainable() const { return attainable_; }

 private:
  int attainable_;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace urbanrom
