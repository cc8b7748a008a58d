#pragma once

#include <stdexcept>
#include <string>

namespace dhall {

// An enumeration or search would exceed a configured bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live over different quivers or fields, or have incompatible shapes.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed label, config file or table.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dhall
