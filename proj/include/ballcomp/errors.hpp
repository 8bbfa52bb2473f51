#pragma once

#include <stdexcept>
#include <string>

namespace ballcomp {

/// Bad caller input: out-of-range ids, unrealizable samples, invalid certificates.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A code or bitstring that cannot be decoded.
class DecodeError : public InputError {
 public:
  using InputError::InputError;
};

/// Malformed text input; the message carries file and line.
class ParseError : public InputError {
 public:
  ParseError(const std::string& file, int line, const std::string& what)
      : InputError(file + ":" + std::to_string(line) + ": " + what), file_(file), line_(line) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

/// An internal invariant failed. Seeing one of these means a bug, not bad input.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ballcomp
