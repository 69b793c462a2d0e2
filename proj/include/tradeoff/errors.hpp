#pragma once
#include <stdexcept>
#include <string>

namespace tradeoff {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Bad arguments: index out of range, dimension mismatch, malformed input.
class input_error : public error {
 public:
  using error::error;
};

//! The value function is -inf at the requested parameter.
class unbounded_error : public error {
 public:
  using error::error;
};

//! A proven identity or inequality failed. For valid inputs this is a bug.
class theorem_violation : public error {
 public:
  using error::error;
};

//! A caller-supplied object does not satisfy its contract.
class precondition_error : public error {
 public:
  using error::error;
};

//! Every point is critical (the derivative polynomial vanishes identically).
class degenerate_error : public error {
 public:
  using error::error;
};

}  // namespace tradeoff
