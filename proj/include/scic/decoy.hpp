#pragma once

#include "scic/channel_sim.hpp"
#include "scic/source_model.hpp"

namespace scic {

// Failure probabilities of the individual modified-Azuma estimates used by
// the decoy bounds.
struct DecoyEpsilons {
    std::array<double, 3> ma_z_k{0, 0, 0}; // per intensity, Z-Z counters
    double ma_z_1 = 0.0;                   // Z-Z single-photon counter
    double ma_x[3][3][2] = {};             // [c][k][y], X-basis counters
    double ma_x1[3][2] = {};               // [c][y], X-basis single-photon counters
};

// How the statistical fluctuation terms are evaluated.
//
// q_mode selects the zero-difference parameter fed to g_MA:
//  * Basis     - q is Bob's basis probability (p_B_Z / p_B_X), the printed
//                form. Default.
//  * EventRate - q is the per-detection rate of the counted event itself,
//                (raw count)/N_det, i.e. the per-step second-moment bound
//                the g_MA derivation actually consumes. Far tighter; kept as
//                a documented alternative because the Basis variant's terms
//                dominate every X-basis counter at realistic block sizes.
enum class QMode { Basis, EventRate };

struct FluctuationOptions {
    bool asymptotic = false;            // drop every g_MA / g_A term
    bool conservative_trailing = false; // subtract (instead of add) the trailing
                                        // g_MA on the lower bounds
    QMode q_mode = QMode::Basis;
};

struct Estimate {
    double value = 0.0;
    bool clamped = false; // raw value fell outside [0, raw-count ceiling]
};

/// Lower bound on the untagged single-photon Z-Z detections, the
/// three-intensity decoy combination with modified-Azuma corrections and the
/// N_tag subtraction on the k2 counter. Clamped to [0, sum_k S_ZZk].
Estimate s1_lower_zz(const ObservedCounts& counts, const SourceSpec& spec,
                     const DecoyEpsilons& eps, double p_b_z, const FluctuationOptions& opt);

/// Upper bound on the untagged single-photon (c, y, X) detections: the
/// (k2, k3) two-intensity combination scaled by the single-photon mixture
/// weight. Throws infeasible_error when the decoy denominator is
/// nonpositive. Clamped to [0, sum_k S_{c,k,det,y,X}].
Estimate sx_upper(Prep c, int y, const ObservedCounts& counts, const SourceSpec& spec,
                  const DecoyEpsilons& eps, double p_b_x, const FluctuationOptions& opt);

/// Lower bound on the untagged single-photon (c, y, X) detections, same
/// combination as s1_lower_zz applied to the X-basis counters.
Estimate sx_lower(Prep c, int y, const ObservedCounts& counts, const SourceSpec& spec,
                  const DecoyEpsilons& eps, double p_b_x, const FluctuationOptions& opt);

} // namespace scic
