#pragma once

#include <stdexcept>
#include <string>

namespace rosen {

// Bad arguments: q out of range, alpha outside [1/2, 1/lambda], mismatched contexts.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Arithmetic that cannot be performed exactly: division by zero, elliptic
// fixed-point equations, negative discriminants.
struct arithmetic_error : std::domain_error {
    using std::domain_error::domain_error;
};

// An operation was asked for in a parameter case where it is not defined
// (e.g. an infinite spectrum query in the finite-spectrum case).
struct case_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A ball straddles a decision boundary, or the adaptive sign test hit the
// precision cap.  Callers refine and retry; the CLI maps this to exit code 3.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure: an ordering theorem evaluated false, a
// supposedly impossible branch was reached, or a zero test contradicted the
// formal-independence assumption.  Never caught silently.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace rosen
