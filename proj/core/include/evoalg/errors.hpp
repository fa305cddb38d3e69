#pragma once

#include <stdexcept>

namespace evoalg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid caller input: malformed documents, bad literals, subsets that are
// not ideals, dimension mismatches. Exit code 1 at the CLI.
struct InputError : Error {
  using Error::Error;
};

// Two routes that must agree by theorem disagreed. Signals an implementation
// bug, never a user error. Exit code 2 at the CLI.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace evoalg
