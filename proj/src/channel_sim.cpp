#include "scic/channel_sim.hpp"

#include <cmath>

namespace scic {

namespace {

struct OutcomeProbs {
    double correct; // matched basis, expected detector
    double wrong;   // matched basis, opposite detector
    double mism;    // mismatched basis, either detector
};

OutcomeProbs outcome_probs(double mu, const ChannelSpec& ch) {
    const double eta = transmittance(ch);
    const double pd = ch.p_dark;
    const double z = std::exp(-eta * mu / 2.0);
    OutcomeProbs p;
    p.correct = (1.0 - z * (1.0 - pd)) * (1.0 - pd / 2.0);
    p.wrong = pd * (1.0 + z * (1.0 - pd)) / 2.0;
    p.mism = (1.0 - (1.0 - pd) * (1.0 - pd) * z) / 2.0;
    return p;
}

} // namespace

double transmittance(const ChannelSpec& channel) {
    return std::pow(10.0, -channel.loss_db_per_km * channel.fiber_length_km / 10.0) *
           channel.eta_det;
}

double detection_prob(Prep c, Basis b, int y, double mu, const ChannelSpec& channel) {
    const OutcomeProbs p = outcome_probs(mu, channel);
    if (c != Prep::X0 && b == Basis::Z) {
        return y == idx(c) ? p.correct : p.wrong;
    }
    if (c == Prep::X0 && b == Basis::X) {
        return y == 0 ? p.correct : p.wrong;
    }
    return p.mism;
}

double bit_error_rate(const ChannelSpec& channel, double mu_k1) {
    const OutcomeProbs p = outcome_probs(mu_k1, channel);
    // wrong-outcome fraction of the matched-Z signal detections
    return 2.0 * p.wrong / (2.0 * (p.correct + p.wrong)) + channel.e_mis;
}

ObservedCounts simulate_counts(double n_sent, const SourceSpec& source, const ChannelSpec& channel,
                               const std::array<double, 3>& mu_expected) {
    ObservedCounts o;
    o.n_sent = n_sent;
    for (Prep c : kPreps) {
        for (Intensity k : kIntensities) {
            for (Basis b : {Basis::Z, Basis::X}) {
                for (int y = 0; y < 2; ++y) {
                    const double count = n_sent * source.p_prep(c) * channel.p_b(b) *
                                         source.p_k(k) *
                                         detection_prob(c, b, y, mu_expected[idx(k)], channel);
                    o.s[idx(c)][idx(k)][y][idx(b)] = count;
                    o.n_det += count;
                }
            }
        }
    }
    for (Intensity k : kIntensities) {
        double zz = 0.0;
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
                zz += o.s[x][idx(k)][y][idx(Basis::Z)];
            }
        }
        o.s_zz[idx(k)] = zz;
        o.sift_len += zz;
    }
    o.e_bit = bit_error_rate(channel, mu_expected[idx(Intensity::k1)]);
    return o;
}

} // namespace scic
