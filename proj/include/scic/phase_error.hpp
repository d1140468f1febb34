#pragma once

#include "scic/source_model.hpp"

namespace scic {

// Upper bounds on the gamma transmission-rate coefficients and the virtual
// state probabilities over the characterised phase box.
struct GammaSet {
    double gamma[2][3] = {}; // [alpha][c]
    double p_u[2] = {};      // p^U_alpha, includes the p_A_Z p_B_Z factor
};

enum class GammaMode { Automatic, Restricted, General };

/// The six closed-form gamma coefficients for one concrete angle triple
/// (theta_0Z, theta_1Z, theta_0X). Throws singular_error when a denominator
/// magnitude drops below 1e-12 (impossible inside the allowed ranges).
double gamma_general(int alpha, Prep c, double th0z, double th1z, double th0x);

/// Closed-form box upper bounds for symmetric intervals of half-width theta
/// in [0, pi/6). Throws std::domain_error outside that range.
double gamma_upper_restricted(int alpha, Prep c, double theta);

/// Box upper bounds for general intervals: fixed-corner evaluations for the
/// Z rows, the max over all 8 corners for (0,0X), and the three-case rule
/// for (1,0X).
double gamma_upper_general(int alpha, Prep c, const PhaseIntervals& phases);

/// p^U_alpha = p_A_Z p_B_Z (1+sin theta)/2 for symmetric intervals.
double p_upper_restricted(int alpha, double theta, double p_a_z, double p_b_z);

/// General-interval p^U_alpha: the cosine corner expressions multiplied by
/// p_A_Z p_B_Z.
double p_upper_general(int alpha, const PhaseIntervals& phases, double p_a_z, double p_b_z);

/// Assembles the gamma set for a phase box. Automatic mode picks the
/// restricted closed forms when the box is symmetric and the general corner
/// replacements otherwise.
GammaSet make_gamma_set(GammaMode mode, const PhaseIntervals& phases, double p_a_z, double p_b_z);

/// Phase-error count upper bound:
///   N_ph^U = sum_{alpha,c} p^U_alpha Gamma[alpha][c]
///            (S'[c][alpha^1] + sgn(Gamma) g_A(n_det, eps_a[c][alpha])) / (p(c) p_B_X)
///            + g_A(n_det, eps_a_ph),
/// clamped below at 0. s_prime[c][y] must already be the upper (Gamma > 0)
/// or lower (Gamma <= 0) single-photon estimate for outcome y. Throws
/// std::domain_error when some p(c) is zero. asymptotic drops the g_A terms.
double n_ph_upper(const double s_prime[3][2], const GammaSet& gammas, double n_det,
                  const std::array<double, 3>& p_c, double p_b_x, const double eps_a[3][2],
                  double eps_a_ph, bool asymptotic);

} // namespace scic
