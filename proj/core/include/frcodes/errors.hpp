// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace frcodes {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition. CLI exit code 1.
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// Search budget or enumeration cap exceeded. CLI exit code 2.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// Unparseable input text. CLI exit code 3.
class FormatError : public Error {
  public:
    using Error::Error;
};

/// File system failure. CLI exit code 3.
class IoError : public Error {
  public:
    using Error::Error;
};

/// Refused node failure: some packet would lose its last live replica.
class ToleranceError : public ArgumentError {
  public:
    using ArgumentError::ArgumentError;
};

/// A packet of a failed node has no live replica left to repair from.
class UnrecoverableError : public Error {
  public:
    using Error::Error;
};

}  // namespace frcodes
