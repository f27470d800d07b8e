#pragma once

#include <stdexcept>
#include <string>

namespace qtscreen {

/// Invalid user input: malformed Cartan data, unparsable expressions, operations
/// called outside their domain (non-dominant monomials, windows too small).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A lattice window that cannot contain the data an operation needs.
class WindowError : public InputError {
 public:
  WindowError(const std::string& what, int required_kmin, int required_kmax)
      : InputError(what), required_kmin_(required_kmin), required_kmax_(required_kmax) {}

  int required_kmin() const { return required_kmin_; }
  int required_kmax() const { return required_kmax_; }

 private:
  int required_kmin_;
  int required_kmax_;
};

}  // namespace qtscreen
