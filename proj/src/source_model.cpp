#include "scic/source_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scic/numerics.hpp"

namespace scic {

namespace {

constexpr double kPi = std::numbers::pi;

void add(std::vector<Violation>& out, std::string code, std::string message) {
    out.push_back(Violation{std::move(code), std::move(message)});
}

bool in_unit(double p) { return p >= 0.0 && p <= 1.0; }

} // namespace

PhaseIntervals PhaseIntervals::symmetric(double theta) {
    PhaseIntervals p;
    p.theta_l_0z = -theta;
    p.theta_u_0z = theta;
    p.theta_l_1z = kPi - theta;
    p.theta_u_1z = kPi + theta;
    p.theta_l_0x = kPi / 2.0 - theta;
    p.theta_u_0x = kPi / 2.0 + theta;
    return p;
}

bool PhaseIntervals::is_symmetric(double tol) const {
    const double t = theta_u_0z;
    return std::abs(theta_l_0z + t) <= tol && std::abs(theta_l_1z - (kPi - t)) <= tol &&
           std::abs(theta_u_1z - (kPi + t)) <= tol && std::abs(theta_l_0x - (kPi / 2.0 - t)) <= tol &&
           std::abs(theta_u_0x - (kPi / 2.0 + t)) <= tol;
}

double PhaseIntervals::symmetric_theta() const { return theta_u_0z; }

std::vector<Violation> validate(const SourceSpec& spec) {
    std::vector<Violation> v;
    const PhaseIntervals& ph = spec.phases;

    if (!(ph.theta_l_0z > -kPi / 6.0 && ph.theta_l_0z <= 0.0)) {
        add(v, "phase.l_0z", "theta_L_0Z must lie in (-pi/6, 0]");
    }
    if (!(ph.theta_u_0z >= 0.0 && ph.theta_u_0z < kPi / 6.0)) {
        add(v, "phase.u_0z", "theta_U_0Z must lie in [0, pi/6)");
    }
    if (!(ph.theta_l_1z > 5.0 * kPi / 6.0 && ph.theta_l_1z <= kPi)) {
        add(v, "phase.l_1z", "theta_L_1Z must lie in (5pi/6, pi]");
    }
    if (!(ph.theta_u_1z >= kPi && ph.theta_u_1z < 7.0 * kPi / 6.0)) {
        add(v, "phase.u_1z", "theta_U_1Z must lie in [pi, 7pi/6)");
    }
    if (!(ph.theta_l_0x > kPi / 3.0 && ph.theta_l_0x <= kPi / 2.0)) {
        add(v, "phase.l_0x", "theta_L_0X must lie in (pi/3, pi/2]");
    }
    if (!(ph.theta_u_0x >= kPi / 2.0 && ph.theta_u_0x < 2.0 * kPi / 3.0)) {
        add(v, "phase.u_0x", "theta_U_0X must lie in [pi/2, 2pi/3)");
    }
    // the range constraints already separate the three intervals; an explicit
    // overlap check still guards ill-formed inputs
    if (ph.theta_u_0z >= ph.theta_l_0x || ph.theta_u_0x >= ph.theta_l_1z) {
        add(v, "phase.overlap", "phase intervals must be pairwise disjoint");
    }

    const IntensityIntervals& in = spec.intensities;
    for (Intensity k : kIntensities) {
        if (!(in.lo(k) >= 0.0 && in.lo(k) <= in.hi(k))) {
            add(v, "intensity.order", "each intensity interval needs 0 <= mu- <= mu+");
            break;
        }
    }
    if (!(in.hi(Intensity::k3) < in.lo(Intensity::k2))) {
        add(v, "intensity.k3_below_k2", "decoy condition mu+_k3 < mu-_k2 violated");
    }
    if (!(in.hi(Intensity::k2) + in.hi(Intensity::k3) < in.lo(Intensity::k1))) {
        add(v, "intensity.k2k3_below_k1", "decoy condition mu+_k2 + mu+_k3 < mu-_k1 violated");
    }
    if (!(in.hi(Intensity::k1) <= 1.0)) {
        add(v, "intensity.k1_cap", "signal intensity cap mu+_k1 <= 1 violated");
    }

    if (!in_unit(spec.p_a_z)) {
        add(v, "prob.p_a_z", "p_A_Z must lie in [0,1]");
    }
    if (!in_unit(spec.p_k1) || !in_unit(spec.p_k2) || !in_unit(spec.p_k3)) {
        add(v, "prob.p_k_range", "intensity probabilities must lie in [0,1]");
    }
    if (std::abs(spec.p_k1 + spec.p_k2 + spec.p_k3 - 1.0) > 1e-12) {
        add(v, "prob.p_k_sum", "intensity probabilities must sum to 1");
    }
    if (spec.n_tag < 0) {
        add(v, "tag.n_tag", "N_tag must be nonnegative");
    }
    if (!in_unit(spec.p_fail)) {
        add(v, "tag.p_fail", "p_fail must lie in [0,1]");
    }
    return v;
}

double pois_bound(int n, Intensity k, BoundSide side, const SourceSpec& spec) {
    if (n < 0) {
        throw std::domain_error("pois_bound: negative photon number");
    }
    const double lo = spec.intensities.lo(k);
    const double hi = spec.intensities.hi(k);
    if (n == 0) {
        return side == BoundSide::Upper ? std::exp(-lo) : std::exp(-hi);
    }
    return side == BoundSide::Upper ? poisson_pmf(n, hi) : poisson_pmf(n, lo);
}

double pois1_mixture(BoundSide side, const SourceSpec& spec) {
    double sum = 0.0;
    for (Intensity k : kIntensities) {
        sum += spec.p_k(k) * pois_bound(1, k, side, spec);
    }
    return sum;
}

} // namespace scic
