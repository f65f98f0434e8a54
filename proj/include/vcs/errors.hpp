#pragma once

#include <stdexcept>

namespace vcs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Categories below exist so callers (and the CLI exit-code mapping) can tell
// bad input apart from bad files and from broken internal invariants.

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class DepthMismatchError : public Error {
 public:
  using Error::Error;
};

class ContextWipedError : public Error {
 public:
  using Error::Error;
};

class AddressOutOfBoundsError : public Error {
 public:
  using Error::Error;
};

class GeometryMismatchError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class LossyFormatError : public FormatError {
 public:
  using FormatError::FormatError;
};

class ManifestError : public FormatError {
 public:
  using FormatError::FormatError;
};

}  // namespace vcs
