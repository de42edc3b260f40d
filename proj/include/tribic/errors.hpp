#pragma once

#include <stdexcept>
#include <string>

namespace tribic {

// Bad user input (malformed files, out-of-range arguments, size guards).
// The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated internal contract or mining invariant. The CLI maps this to
// exit code 2; seeing one means a bug, not bad data.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tribic
