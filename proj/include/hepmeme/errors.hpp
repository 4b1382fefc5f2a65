#pragma once

#include <stdexcept>
#include <string>

namespace hepmeme {

// Base of every error raised by the library. Callers that only need a
// diagnostic catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class MalformedRecord : public Error {
 public:
  using Error::Error;
};

class InvalidPaperId : public Error {
 public:
  using Error::Error;
};

class InvalidLexicon : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class EmptyUniverse : public Error {
 public:
  using Error::Error;
};

class UnknownMeme : public Error {
 public:
  explicit UnknownMeme(const std::string& meme)
      : Error("unknown meme '" + meme + "'") {}
};

class EmptyEdgeSet : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class DegenerateVariance : public Error {
 public:
  using Error::Error;
};

}  // namespace hepmeme
