#ifndef WEYLCHAR_ERRORS_HPP
#define WEYLCHAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weylchar {

/// Bad caller input: unknown algebra, wrong coordinate count, non-dominant weight.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical guarantee failed. Always indicates a bug or a corrupted table.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by exact_div when the remainder is nonzero.
class NotDivisibleError : public IntegrityError {
public:
    using IntegrityError::IntegrityError;
};

/// The Weyl group is too large for explicit enumeration.
class EnvelopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace weylchar

#endif
