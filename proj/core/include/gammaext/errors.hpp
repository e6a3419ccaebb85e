#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gammaext {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or argument dimensions do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A zero column (loop) where a loopless representation is required.
class LoopError : public Error {
 public:
  explicit LoopError(std::string label)
      : Error("loop detected at column '" + label + "'"), label_(std::move(label)) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// An element present in every basis (coloop) where none is allowed.
class ColoopError : public Error {
 public:
  explicit ColoopError(std::string label)
      : Error("coloop detected at element '" + label + "'"), label_(std::move(label)) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// An unknown, duplicate, or otherwise invalid ground-set label.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// A set argument that must be non-empty (or must not exhaust the ground set).
class EmptyError : public Error {
 public:
  using Error::Error;
};

/// A set that must be independent is dependent.
class DependentError : public Error {
 public:
  using Error::Error;
};

/// Ground set exceeds the configured exhaustive-search bound.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Unknown catalog fixture name.
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix file; carries the 1-based offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gammaext
