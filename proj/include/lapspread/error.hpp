#pragma once

#include <stdexcept>
#include <string>

namespace lapspread {

/// Argument outside the domain on which a function is defined.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (graph6 strings, family specs, filter names).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lapspread
