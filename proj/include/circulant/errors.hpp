#pragma once

#include <stdexcept>
#include <string>

namespace circulant {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when 0 < B < C < A fails; the message names the violated inequality.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class NotQBase : public Error {
 public:
  using Error::Error;
};

class DegenerateSection : public Error {
 public:
  using Error::Error;
};

class DegeneratePyramid : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace circulant
