#pragma once

#include <stdexcept>

namespace qtl {

// Error taxonomy shared by the C++ core and mirrored by the C API status
// codes: shape (structural mismatch), domain (precondition on values),
// numeric (solver failure), config (sweep setup), io (file writing).

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qtl
