#pragma once

#include <stdexcept>

namespace entro {

// Malformed input or broken invariant: unknown labels, non-normalized
// tables, non-Hermitian/non-unitary matrices, out-of-contract arguments.
// The CLI maps this to exit code 1.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Well-formed input that the physical model rejects, e.g. a proto black
// hole whose thermal entropy is below the horizon entropy. Exit code 2.
struct ModelDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace entro
