#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace scic {

// Alice's bit-and-basis choice.
enum class Prep : int { Z0 = 0, Z1 = 1, X0 = 2 };

// Intensity setting: signal, strong decoy, weak decoy.
enum class Intensity : int { k1 = 0, k2 = 1, k3 = 2 };

// Bob's measurement basis.
enum class Basis : int { Z = 0, X = 1 };

enum class BoundSide { Lower, Upper };

constexpr std::array<Prep, 3> kPreps{Prep::Z0, Prep::Z1, Prep::X0};
constexpr std::array<Intensity, 3> kIntensities{Intensity::k1, Intensity::k2, Intensity::k3};

inline int idx(Prep c) { return static_cast<int>(c); }
inline int idx(Intensity k) { return static_cast<int>(k); }
inline int idx(Basis b) { return static_cast<int>(b); }

// Characterised phase interval per preparation, radians. The allowed ranges
// keep the three intervals disjoint and the gamma denominators away from
// zero.
struct PhaseIntervals {
    double theta_l_0z = 0.0, theta_u_0z = 0.0;
    double theta_l_1z = 0.0, theta_u_1z = 0.0; // around pi
    double theta_l_0x = 0.0, theta_u_0x = 0.0; // around pi/2

    static PhaseIntervals symmetric(double theta);

    // true when the intervals are +-theta around the ideal encoding angles
    bool is_symmetric(double tol = 1e-12) const;
    double symmetric_theta() const; // max half-width, for symmetric intervals
};

// Characterised intensity interval [mu_minus, mu_plus] per setting.
struct IntensityIntervals {
    std::array<double, 3> mu_minus{0, 0, 0};
    std::array<double, 3> mu_plus{0, 0, 0};

    double lo(Intensity k) const { return mu_minus[idx(k)]; }
    double hi(Intensity k) const { return mu_plus[idx(k)]; }
};

struct Violation {
    std::string code;    // machine readable, e.g. "intensity.k1_cap"
    std::string message; // human readable
};

// Full source characterisation: fluctuation intervals, setting
// probabilities and the tagging budget.
struct SourceSpec {
    PhaseIntervals phases;
    IntensityIntervals intensities;
    double p_a_z = 0.8;        // p(0_Z) = p(1_Z) = p_a_z / 2, p(0_X) = 1 - p_a_z
    double p_k1 = 0.8, p_k2 = 0.1, p_k3 = 0.1;
    std::int64_t n_tag = 0;    // upper bound on the number of tagged pulses
    double p_fail = 0.0;       // probability the tagging bound fails

    double p_k(Intensity k) const {
        switch (k) {
            case Intensity::k1: return p_k1;
            case Intensity::k2: return p_k2;
            default: return p_k3;
        }
    }
    double p_prep(Prep c) const { return c == Prep::X0 ? 1.0 - p_a_z : p_a_z / 2.0; }
};

/// Checks every structural invariant of the source characterisation (phase
/// ranges and disjointness, intensity interval ordering, decoy-feasibility
/// conditions, probability ranges). Violations are returned as data, not
/// thrown.
std::vector<Violation> validate(const SourceSpec& spec);

/// Interval bounds on the Poisson photon-number weights:
/// upper:  e^{-mu^-} for n = 0,  e^{-mu^+} (mu^+)^n / n! for n >= 1
/// lower:  e^{-mu^+} for n = 0,  e^{-mu^-} (mu^-)^n / n! for n >= 1
/// The n >= 1 upper form needs mu^+ <= 1, guaranteed by validate().
double pois_bound(int n, Intensity k, BoundSide side, const SourceSpec& spec);

/// Setting-averaged single-photon weight sum_k p_k * pois_bound(1,k,side).
double pois1_mixture(BoundSide side, const SourceSpec& spec);

} // namespace scic
