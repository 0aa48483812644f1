#pragma once

#include <stdexcept>
#include <string>

namespace allab {

// Base class of every error the library throws on bad input or a broken
// precondition. Internal consistency failures use InternalViolation.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotALattice : public Error {
public:
  using Error::Error;
};

class NoBounds : public Error {
public:
  using Error::Error;
};

class UnknownLabel : public Error {
public:
  using Error::Error;
};

class DuplicateLabel : public Error {
public:
  using Error::Error;
};

class PartialUnary : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& expected)
      : Error("parse error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

class UnboundVariable : public Error {
public:
  using Error::Error;
};

class NotComplemented : public Error {
public:
  using Error::Error;
};

class NotInV : public Error {
public:
  using Error::Error;
};

class NotAnIdeal : public Error {
public:
  using Error::Error;
};

class NotADerangement : public Error {
public:
  using Error::Error;
};

// Thrown when a property the theory guarantees fails to verify; indicates a
// bug in this library, never a bad input.
class InternalViolation : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace allab
