#pragma once

#include <stdexcept>
#include <string>

namespace rrmono {

// Bad user input (malformed ideal text, out-of-scope ideal, bad flag value).
// The CLI maps this to exit code 1.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A theory-backed runtime cross-check failed.  This never fires on correct
// code; it means an implementation bug, so the CLI maps it to exit code 2.
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace rrmono
