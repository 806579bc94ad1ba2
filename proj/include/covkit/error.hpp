#pragma once

#include <stdexcept>
#include <string>

namespace covkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotIsometry : public Error {
 public:
  using Error::Error;
};

// Two blocks of a decomposition carry equivalent irreducibles.
class MultiplicityDetected : public Error {
 public:
  using Error::Error;
};

class NotInFusionRange : public Error {
 public:
  using Error::Error;
};

// An intertwiner space had the wrong dimension; for CG isometries this means
// the representation conventions are inconsistent.
class NullSpaceDimension : public Error {
 public:
  NullSpaceDimension(const std::string& what, std::size_t found)
      : Error(what + " (found dimension " + std::to_string(found) + ")"), found_(found) {}
  std::size_t found() const { return found_; }

 private:
  std::size_t found_;
};

class DegenerateCharacters : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class DecompositionError : public Error {
 public:
  using Error::Error;
};

}  // namespace covkit
