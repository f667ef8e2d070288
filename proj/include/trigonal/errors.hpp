#ifndef TRIGONAL_ERRORS_HPP
#define TRIGONAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trigonal {

/// Malformed user input: bad partition strings, invalid shapes, bad matrices.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration or expansion limit would be exceeded.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Internal consistency failure (e.g. a straightening run that does not terminate).
class AlgorithmError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A numerical tolerance cannot be met within the configured work budget.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trigonal

#endif  // TRIGONAL_ERRORS_HPP
