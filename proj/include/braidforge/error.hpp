#pragma once

#include <stdexcept>

namespace braidforge {

// Malformed or out-of-range input (bad indices, shape mismatches, unparseable
// text). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally valid input that an operation cannot answer (unsupported case,
// failed mathematical precondition). The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace braidforge
