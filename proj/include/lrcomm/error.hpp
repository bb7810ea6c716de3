#pragma once

#include <stdexcept>
#include <string>

namespace lrcomm {

// Base for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data is malformed (not a partition, bad shape, not LR, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An operator was applied outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lrcomm
