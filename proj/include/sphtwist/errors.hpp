#pragma once

#include <stdexcept>
#include <string>

namespace sphtwist {

/// Base of every error raised by a computation (as opposed to bad usage).
/// The CLI maps these to exit code 3.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedDiagram : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// A vertex, hammock or composite leaves the materialized window.
class InsufficientWindow : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// More than one vertex map satisfies the twist constraints.
class AmbiguousAction : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class HypothesisViolated : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class InvalidInput : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class MismatchedParameter : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class ValidationFailure : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class SelfinjectivityViolation : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// Internal consistency check failed; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input (words, vertices, config files, elements).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        reason_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
  std::size_t position_;
};

}  // namespace sphtwist
