#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace p2lsg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid generator or pipeline configuration (bad base, bad parallelism, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's domain (value out of range, length mismatch).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested count exceeds what a generator can provide.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A sequence ran dry or a randomized construction gave up.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. Carries the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A file operation failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace p2lsg
