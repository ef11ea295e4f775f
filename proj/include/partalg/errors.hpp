#pragma once

#include <stdexcept>
#include <string>

namespace partalg {

/// Malformed input: bad partition text, inconsistent arguments, violated preconditions.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation needs the ambient (k, l) of a filter but none was given,
/// or two filters disagree on it.
class AmbientError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A brute-force computation would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace partalg
