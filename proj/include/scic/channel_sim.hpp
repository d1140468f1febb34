#pragma once

#include <array>

#include "scic/source_model.hpp"

namespace scic {

struct ChannelSpec {
    double fiber_length_km = 0.0;
    double loss_db_per_km = 0.2;
    double eta_det = 0.1;  // detector efficiency
    double p_dark = 1e-5;  // dark count probability per pulse
    double e_mis = 0.01;   // misalignment error, enters e_bit only
    double p_b_z = 0.8;    // Bob's Z basis probability

    double p_b(Basis b) const { return b == Basis::Z ? p_b_z : 1.0 - p_b_z; }
};

// Expected detection tallies for one run. Counts are expected values
// (reals), the same convention the rate curves are computed with.
struct ObservedCounts {
    // s[c][k][y][b] = expected |{i : c^i=c, k^i=k, y^i=y, b^i=b}|
    double s[3][3][2][2] = {};
    std::array<double, 3> s_zz{0, 0, 0}; // Z-Z sifted detections per intensity
    double n_det = 0.0;                  // all detection events
    double sift_len = 0.0;               // sum_k s_zz[k]
    double e_bit = 0.0;                  // sifted-key bit error rate
    double n_sent = 0.0;

    double at(Prep c, Intensity k, int y, Basis b) const { return s[idx(c)][idx(k)][y][idx(b)]; }
    double x_count(Prep c, Intensity k, int y) const { return s[idx(c)][idx(k)][y][idx(Basis::X)]; }
};

/// Overall transmittance 10^{-loss*l/10} * eta_det.
double transmittance(const ChannelSpec& channel);

/// Detection probability p(y | c, b, mu) of the interferometric measurement
/// model: matched-basis correct/wrong outcomes and the basis-mismatched
/// 50/50 branch, all including dark counts.
double detection_prob(Prep c, Basis b, int y, double mu, const ChannelSpec& channel);

/// Bit error rate of the sifted key for signal intensity mu_k1:
/// wrong-outcome fraction of the matched-Z detections plus e_mis.
double bit_error_rate(const ChannelSpec& channel, double mu_k1);

/// Expected observable counts for n_sent pulses:
///   s[c][k][y][b] = n_sent p(c) p_B(b) p_k p(y|c,k,b).
/// mu_expected holds the nominal intensity per setting (weak decoy usually 0).
ObservedCounts simulate_counts(double n_sent, const SourceSpec& source, const ChannelSpec& channel,
                               const std::array<double, 3>& mu_expected);

} // namespace scic
