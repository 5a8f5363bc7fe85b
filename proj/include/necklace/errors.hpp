#pragma once

#include <stdexcept>

namespace necklace {

/// A computation would exceed a configured size bound (expanded polynomial
/// terms, enumerated words). Raised before the expensive work starts.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exact division that must succeed does not. Always a bug in
/// this library, never a property of the input.
class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace necklace
