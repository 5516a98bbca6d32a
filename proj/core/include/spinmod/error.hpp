#pragma once

#include <stdexcept>
#include <string>

namespace spinmod {

// Malformed or inconsistent input: unknown ids, broken involutions, bad JSON.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well formed but outside the operation's domain (e.g. a
// non-cyclic edge set where a cyclic one is required).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured cap (cycle rank, edge budget, group size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold did not. The message names the witness.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spinmod
