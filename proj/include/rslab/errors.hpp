// SPDX-License-Identifier: Apache-2.0
// Exception types shared by the codec library.
#pragma once

#include <stdexcept>
#include <string>

namespace rslab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in finite field") {}
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("singular matrix") {}
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace rslab
