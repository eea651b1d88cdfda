#pragma once

#include <stdexcept>
#include <string>

namespace cuntz {

// Invalid problem input (bad expression, digit out of range, size/shape
// mismatch).  The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Failure inside a numerical backend (SVD/eigensolver did not converge,
// allocation too large).  The CLI maps this to exit code 3.
class ComputationalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cuntz
