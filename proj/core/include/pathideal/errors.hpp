#ifndef PATHIDEAL_ERRORS_HPP
#define PATHIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pathideal {

// Malformed tree/complex/ideal input (file or JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive enumeration would exceed its hard size bound.  Guards fail
// loudly instead of truncating silently.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pathideal

#endif  // PATHIDEAL_ERRORS_HPP
