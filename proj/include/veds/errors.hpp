#pragma once

#include <stdexcept>
#include <string>

namespace veds {

// Malformed input: bad file syntax, out-of-range indices, invalid orderings.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition (e.g. disconnected graph
// handed to an operation that requires a connected one).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive routines refuse inputs above their size cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance has no solution of the requested kind (e.g. no set cover).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Random generation gave up after its retry budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace veds
