#pragma once

#include <stdexcept>
#include <string>

namespace homcode {

// Raised when an operation would exceed its configured size guard
// (dense simulation dimension, search state space, ...).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when input data violates a structural contract (dangling cell
// reference, missing transition entry, inconsistent degrees/moduli).
class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace homcode
