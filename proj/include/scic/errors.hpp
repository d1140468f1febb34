#pragma once

#include <stdexcept>
#include <string>

namespace scic {

// Thrown when the decoy linear combinations are evaluated on a source spec
// whose intervals break the decoy-feasibility conditions (nonpositive
// denominators). validate() catches these earlier on well-formed inputs.
struct infeasible_error : std::runtime_error {
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the gamma coefficient evaluators when a denominator magnitude
// falls below the singularity guard. Cannot happen for angles inside the
// allowed phase ranges.
struct singular_error : std::runtime_error {
    explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace scic
