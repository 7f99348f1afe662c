#pragma once

#include <stdexcept>

namespace qmetro {

// Malformed or inconsistent input: wrong shape, broken structural
// invariant, bad flag.  Maps to CLI exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structurally fine input that lies outside an operation's mathematical
// domain (singular matrix with s <= 0, rank-deficient state for the RLD,
// truncation deficit, ...).  Maps to CLI exit code 3.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qmetro
