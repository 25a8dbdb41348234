#pragma once

#include <stdexcept>

namespace convsum {

/// Requested (r, s) pair has no built-in cusp-form data or closed formula.
class unsupported_pair_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested level falls outside the squarefree range the solver handles.
class unsupported_level_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Eta-quotient text that does not match the "d^r" grammar.
class eta_parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact identity produced a non-integer where an integer is required.
/// Signals inconsistent coefficients or cusp data, not bad user input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace convsum
