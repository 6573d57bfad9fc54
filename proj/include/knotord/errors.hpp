#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotord {

// Base for every error raised by the library. Each subclass corresponds to one
// failure mode of the public API.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial is not exactly divisible over the integers") {}
};

class NotSymmetrizable : public Error {
 public:
  NotSymmetrizable() : Error("no integer shift makes the polynomial palindromic") {}
};

class NotLSpaceForm : public Error {
 public:
  explicit NotLSpaceForm(const std::string& what = "polynomial is not of L-space form")
      : Error(what) {}
};

class DegreeOverflow : public Error {
 public:
  DegreeOverflow() : Error("exponent exceeds the 64-bit range") {}
};

// Syntax error in a knot expression or polynomial; carries the byte offset of
// the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class ValidityError : public Error {
 public:
  using Error::Error;
};

class InvalidArc : public Error {
 public:
  using Error::Error;
};

class BoundaryCase : public Error {
 public:
  using Error::Error;
};

class EpsilonUnsupported : public Error {
 public:
  using Error::Error;
};

class NonMonotoneInput : public Error {
 public:
  using Error::Error;
};

class WitnessFails : public Error {
 public:
  using Error::Error;
};

// Malformed row in an ingested data table; row numbers are 1-based and count
// the header as row 1.
class DataError : public Error {
 public:
  DataError(const std::string& msg, std::size_t row)
      : Error("row " + std::to_string(row) + ": " + msg), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

}  // namespace knotord
