#pragma once

#include <stdexcept>
#include <string>

namespace ftpoly {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1; UsageError maps to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

class WindowTooSmallError : public Error {
 public:
  using Error::Error;
};

class StabilizerExhaustedError : public Error {
 public:
  using Error::Error;
};

class NotVertexTransitiveError : public Error {
 public:
  using Error::Error;
};

class DegenerateVertexFigureError : public Error {
 public:
  using Error::Error;
};

class AlternationViolatedError : public Error {
 public:
  using Error::Error;
};

class FaceFillingNotUniqueError : public Error {
 public:
  using Error::Error;
};

class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace ftpoly
