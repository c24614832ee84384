#pragma once

#include <stdexcept>
#include <string>

namespace macforge {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input (unreadable file, bad JSON, bad text format).
struct parse_error : error {
    using error::error;
};

/// Structurally well-formed input that violates a domain invariant
/// (vertex out of range, ghost vertex, m > 24, zero facets, ...).
struct validation_error : error {
    using error::error;
};

/// An internal cross-check between two independent computation paths
/// disagreed.  Signals an implementation bug, never bad input.
struct check_failure : error {
    using error::error;
};

}  // namespace macforge
