#ifndef BOXIKIT_ERRORS_HPP
#define BOXIKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace boxikit {

/// Malformed or inconsistent caller input (bad labels, unsorted exponent
/// lists, mismatched vertex sets, unparsable JSON, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact search was asked to run past its configured ceiling.  Partial
/// results are never reported; the caller gets this instead.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace boxikit

#endif
