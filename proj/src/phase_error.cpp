#include "scic/phase_error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "scic/concentration.hpp"
#include "scic/errors.hpp"

namespace scic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularGuard = 1e-12;

double guarded_ratio(double num, double den) {
    if (std::abs(den) < kSingularGuard) {
        throw singular_error("gamma coefficient: denominator below singularity guard");
    }
    return num / den;
}

} // namespace

double gamma_general(int alpha, Prep c, double th0z, double th1z, double th0x) {
    const double a = (th0z + th1z - 2.0 * th0x) / 4.0;
    if (alpha == 0) {
        switch (c) {
            case Prep::Z0:
                return guarded_ratio(std::sin(a),
                                     std::sin(a) - std::sin((-3.0 * th0z + th1z + 2.0 * th0x) / 4.0));
            case Prep::Z1:
                return guarded_ratio(std::sin(a),
                                     std::sin(a) + std::sin((-th0z + 3.0 * th1z - 2.0 * th0x) / 4.0));
            case Prep::X0:
                return guarded_ratio(1.0 - std::cos((th0z - th1z) / 2.0),
                                     std::cos((th0z + th1z - 2.0 * th0x) / 2.0) -
                                         std::cos((th0z - th1z) / 2.0));
        }
    }
    switch (c) {
        case Prep::Z0:
            return guarded_ratio(std::cos(a),
                                 std::cos(a) - std::cos((-3.0 * th0z + th1z + 2.0 * th0x) / 4.0));
        case Prep::Z1:
            return guarded_ratio(std::cos(a),
                                 std::cos(a) - std::cos((-th0z + 3.0 * th1z - 2.0 * th0x) / 4.0));
        default:
            return guarded_ratio(-1.0 - std::cos((th0z - th1z) / 2.0),
                                 std::cos((th0z + th1z - 2.0 * th0x) / 2.0) -
                                     std::cos((th0z - th1z) / 2.0));
    }
}

double gamma_upper_restricted(int alpha, Prep c, double theta) {
    if (!(theta >= 0.0 && theta < kPi / 6.0)) {
        throw std::domain_error("gamma_upper_restricted: theta outside [0, pi/6)");
    }
    const double s = std::sin(theta);
    if (alpha == 0) {
        switch (c) {
            case Prep::Z0:
            case Prep::Z1:
                return s / (s + std::cos(1.5 * theta));
            default:
                return (1.0 - s) / (std::cos(2.0 * theta) - s);
        }
    }
    switch (c) {
        case Prep::Z0:
        case Prep::Z1:
            return std::cos(theta) / (std::cos(theta) - std::sin(1.5 * theta));
        default:
            return -(1.0 - s) / (1.0 + s);
    }
}

double gamma_upper_general(int alpha, Prep c, const PhaseIntervals& ph) {
    if (alpha == 0 && c == Prep::Z0) {
        return gamma_general(0, Prep::Z0, ph.theta_l_0z, ph.theta_l_1z, ph.theta_u_0x);
    }
    if (alpha == 0 && c == Prep::Z1) {
        return gamma_general(0, Prep::Z1, ph.theta_u_0z, ph.theta_u_1z, ph.theta_l_0x);
    }
    if (alpha == 0 && c == Prep::X0) {
        // no closed-form corner; take the max over all 8 corners
        double best = -std::numeric_limits<double>::infinity();
        for (double t0 : {ph.theta_l_0z, ph.theta_u_0z}) {
            for (double t1 : {ph.theta_l_1z, ph.theta_u_1z}) {
                for (double tx : {ph.theta_l_0x, ph.theta_u_0x}) {
                    best = std::max(best, gamma_general(0, Prep::X0, t0, t1, tx));
                }
            }
        }
        return best;
    }
    if (alpha == 1 && c == Prep::Z0) {
        return gamma_general(1, Prep::Z0, ph.theta_u_0z, ph.theta_l_1z, ph.theta_l_0x);
    }
    if (alpha == 1 && c == Prep::Z1) {
        return gamma_general(1, Prep::Z1, ph.theta_u_0z, ph.theta_l_1z, ph.theta_u_0x);
    }
    // (1, 0X): the maximiser in theta_0X is the midpoint of the other two
    // interval edges when it falls inside R_0X, else the nearer edge
    const double mid = (ph.theta_l_0z + ph.theta_u_1z) / 2.0;
    double tx;
    if (ph.theta_u_0x < mid) {
        tx = ph.theta_u_0x;
    } else if (mid < ph.theta_l_0x) {
        tx = ph.theta_l_0x;
    } else {
        tx = mid;
    }
    return gamma_general(1, Prep::X0, ph.theta_l_0z, ph.theta_u_1z, tx);
}

double p_upper_restricted(int alpha, double theta, double p_a_z, double p_b_z) {
    (void)alpha; // identical for both virtual states
    if (!(theta >= 0.0 && theta < kPi / 6.0)) {
        throw std::domain_error("p_upper_restricted: theta outside [0, pi/6)");
    }
    return p_a_z * p_b_z * (1.0 + std::sin(theta)) / 2.0;
}

double p_upper_general(int alpha, const PhaseIntervals& ph, double p_a_z, double p_b_z) {
    const double v = alpha == 0
                         ? (1.0 + std::cos((ph.theta_u_0z - ph.theta_l_1z) / 2.0)) / 2.0
                         : (1.0 - std::cos((ph.theta_l_0z - ph.theta_u_1z) / 2.0)) / 2.0;
    return p_a_z * p_b_z * v;
}

GammaSet make_gamma_set(GammaMode mode, const PhaseIntervals& phases, double p_a_z, double p_b_z) {
    const bool restricted =
        mode == GammaMode::Restricted || (mode == GammaMode::Automatic && phases.is_symmetric());
    GammaSet g;
    if (restricted) {
        const double theta = phases.symmetric_theta();
        for (int alpha = 0; alpha < 2; ++alpha) {
            for (Prep c : kPreps) {
                g.gamma[alpha][idx(c)] = gamma_upper_restricted(alpha, c, theta);
            }
            g.p_u[alpha] = p_upper_restricted(alpha, theta, p_a_z, p_b_z);
        }
    } else {
        for (int alpha = 0; alpha < 2; ++alpha) {
            for (Prep c : kPreps) {
                g.gamma[alpha][idx(c)] = gamma_upper_general(alpha, c, phases);
            }
            g.p_u[alpha] = p_upper_general(alpha, phases, p_a_z, p_b_z);
        }
    }
    return g;
}

double n_ph_upper(const double s_prime[3][2], const GammaSet& gammas, double n_det,
                  const std::array<double, 3>& p_c, double p_b_x, const double eps_a[3][2],
                  double eps_a_ph, bool asymptotic) {
    double sum = asymptotic ? 0.0 : g_azuma(n_det, eps_a_ph);
    for (int alpha = 0; alpha < 2; ++alpha) {
        for (Prep c : kPreps) {
            const int ic = idx(c);
            if (!(p_c[ic] > 0.0)) {
                throw std::domain_error("n_ph_upper: zero preparation probability");
            }
            const double gamma = gammas.gamma[alpha][ic];
            const double sgn = gamma > 0.0 ? 1.0 : (gamma < 0.0 ? -1.0 : 0.0);
            const double ga = asymptotic ? 0.0 : g_azuma(n_det, eps_a[ic][alpha]);
            sum += gammas.p_u[alpha] * gamma * (s_prime[ic][alpha ^ 1] + sgn * ga) /
                   (p_c[ic] * p_b_x);
        }
    }
    return std::max(sum, 0.0);
}

} // namespace scic
