#ifndef LEF_ERRORS_HPP
#define LEF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lef {

/// Base class for all errors thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or unusable input (parse failures, shape mismatches, ...).
/// CLI exit code 1.
struct input_error : error {
    using error::error;
};

struct dimension_mismatch : input_error {
    using input_error::input_error;
};

struct invalid_arrangement : input_error {
    using input_error::input_error;
};

/// Input is well-formed but outside what this operation supports.
struct unsupported_input : input_error {
    using input_error::input_error;
};

/// A theorem hypothesis required by the requested check does not hold
/// for the given input. CLI exit code 2.
struct hypothesis_violation : error {
    using error::error;
};

/// A degree/iteration bound supplied by the caller is too small to decide
/// the question.
struct insufficient_bound : hypothesis_violation {
    using hypothesis_violation::hypothesis_violation;
};

/// Two routes that a theorem proves equal disagreed, or an internal
/// invariant broke. Always a bug, never a property of the input.
/// CLI exit code 3.
struct internal_inconsistency : error {
    using error::error;
};

} // namespace lef

#endif // LEF_ERRORS_HPP
