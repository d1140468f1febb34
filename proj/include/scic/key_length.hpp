#pragma once

#include "scic/decoy.hpp"

namespace scic {

// The complete failure-probability tree. The phase-side composition depends
// on which decoy bound (upper / lower) each (c, y) cell actually used: an
// upper bound consumes the two-intensity epsilon set, a lower bound the
// three-intensity set.
struct EpsilonBudget {
    double eps_s = 0.0;  // secrecy target reproduced by the composition
    double eps_c = 0.0;  // correctness
    double eps_pa = 0.0; // privacy amplification
    double eps_ph = 0.0; // phase-error estimation
    double eps_z = 0.0;  // Z single-photon estimation
    DecoyEpsilons decoy;
    double a_x1[3][2] = {}; // eps^{c,1,u,y,X}_A (plain Azuma terms), [c][alpha]
    double a_ph = 0.0;      // eps^{ph,Z,1,u}_A
    double p_fail = 0.0;

    double composed_eps_z() const;
    // used_upper[c][y]: true when the (c, y) estimate came from sx_upper
    double composed_eps_ph(const bool used_upper[3][2]) const;
    double composed_eps_s(const bool used_upper[3][2]) const;
};

/// The reference allocation scaled to the targets: eps_Z = eps_s/2,
/// eps_PA = eps_PH = eps_s^2/16, each Z-side term eps_Z/4, each phase-side
/// term eps_PH/26. Verifies the recomposed eps_s does not exceed the target
/// (throws infeasible_error otherwise).
EpsilonBudget default_budget(double eps_s_target, double eps_c);

/// Redistributes the Z-side terms when a nonzero tagging failure
/// probability participates in eps_Z. Throws infeasible_error when
/// p_fail >= eps_Z.
EpsilonBudget with_p_fail(EpsilonBudget budget, double p_fail);

/// Error-correction cost 1.05 * sift_len * h(e_bit) + log2(1/eps_c).
double ec_cost(double sift_len, double e_bit, double eps_c);

struct KeyLength {
    double ell = 0.0;
    bool aborted = false;
};

/// Final key length s1L (1 - h(nphU/s1L)) - log2(2/eps_PA) - lambda_EC,
/// with the phase-error ratio clamped to [0, 1/2] and nonpositive lengths
/// reported as an abort.
KeyLength key_length(double s1l, double nphu, const EpsilonBudget& budget, double lambda_ec);

} // namespace scic
