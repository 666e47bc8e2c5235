#pragma once

#include <stdexcept>
#include <string>

namespace chiforge {

/// Malformed or out-of-contract input (bad file, invalid permutation,
/// size cap exceeded, ...).  CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A verified internal invariant failed.  This is never a mathematical
/// verdict; it signals an implementation fault.  CLI maps this to exit 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// An exact normalization would leave the cyclotomic ground field
/// (e.g. a polar decomposition needing an irrational non-cyclotomic root).
class NormalizationError : public InputError {
public:
    explicit NormalizationError(const std::string& what) : InputError(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

inline void input_check(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

} // namespace chiforge
