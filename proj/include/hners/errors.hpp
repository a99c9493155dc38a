#pragma once

#include <stdexcept>
#include <string>

namespace hners {

// Bad user-facing configuration (hyperparameters, grid/geometry mismatch, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid numeric input to an operation (non-finite coordinate, bad weights, ...).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-range grid/pixel index.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Incompatible tensor shapes between caller and callee.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violation of the four-corner neighborhood contract fed to the interpolator.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed file content. `offset` is the byte position of the first problem
// when known, -1 otherwise.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what, long long offset = -1)
      : std::runtime_error(what), offset_(offset) {}
  long long offset() const { return offset_; }

 private:
  long long offset_;
};

// Non-finite loss or gradient during optimization.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hners
