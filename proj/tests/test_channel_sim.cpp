#include <doctest.h>

#include <cmath>

#include "scic/channel_sim.hpp"

using namespace scic;

namespace {

SourceSpec reference_source() {
    SourceSpec s;
    s.phases = PhaseIntervals::symmetric(0.03);
    s.intensities.mu_minus = {0.485, 0.097, 0.0};
    s.intensities.mu_plus = {0.515, 0.103, 1e-3};
    return s;
}

ChannelSpec channel_at(double km) {
    ChannelSpec c;
    c.fiber_length_km = km;
    return c;
}

} // namespace

TEST_CASE("transmittance") {
    CHECK(transmittance(channel_at(0.0)) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(transmittance(channel_at(50.0)) == doctest::Approx(0.01).epsilon(1e-14));
    CHECK(transmittance(channel_at(75.0)) ==
          doctest::Approx(0.0031622776601683794).epsilon(1e-14));
}

TEST_CASE("detection probabilities, frozen at eta=0.01, mu=0.5, pd=1e-5") {
    ChannelSpec ch = channel_at(50.0); // eta = 0.01
    CHECK(detection_prob(Prep::Z0, Basis::Z, 0, 0.5, ch) ==
          doctest::Approx(0.0025068400995006817).epsilon(1e-13));
    CHECK(detection_prob(Prep::Z0, Basis::Z, 1, 0.5, ch) ==
          doctest::Approx(9.9874657368311807e-06).epsilon(1e-13));
    CHECK(detection_prob(Prep::Z0, Basis::X, 0, 0.5, ch) ==
          doctest::Approx(0.0012584137826187565).epsilon(1e-13));
    CHECK(detection_prob(Prep::Z0, Basis::X, 1, 0.5, ch) ==
          detection_prob(Prep::Z0, Basis::X, 0, 0.5, ch));
    // the 0_X preparation mirrors the matched-Z families
    CHECK(detection_prob(Prep::X0, Basis::X, 0, 0.5, ch) ==
          detection_prob(Prep::Z1, Basis::Z, 1, 0.5, ch));
    CHECK(detection_prob(Prep::X0, Basis::Z, 0, 0.5, ch) ==
          detection_prob(Prep::Z0, Basis::X, 1, 0.5, ch));
}

TEST_CASE("no light and no dark counts means no detections") {
    ChannelSpec ch = channel_at(10.0);
    ch.p_dark = 0.0;
    for (Prep c : kPreps) {
        for (Basis b : {Basis::Z, Basis::X}) {
            for (int y = 0; y < 2; ++y) {
                CHECK(detection_prob(c, b, y, 0.0, ch) == 0.0);
            }
        }
    }
}

TEST_CASE("outcome probabilities stay in [0,1] and sum below 1 on a grid") {
    for (double km : {0.0, 40.0, 120.0}) {
        for (double pd : {0.0, 1e-5, 1e-2}) {
            for (double mu : {0.0, 0.1, 0.6, 1.0}) {
                ChannelSpec ch = channel_at(km);
                ch.p_dark = pd;
                for (Prep c : kPreps) {
                    for (Basis b : {Basis::Z, Basis::X}) {
                        double sum = 0.0;
                        for (int y = 0; y < 2; ++y) {
                            const double p = detection_prob(c, b, y, mu, ch);
                            CHECK(p >= 0.0);
                            CHECK(p <= 1.0);
                            sum += p;
                        }
                        CHECK(sum <= 1.0 + 1e-12);
                    }
                }
            }
        }
    }
}

TEST_CASE("bit error rate limits and frozen value") {
    {
        ChannelSpec ch = channel_at(25.0);
        ch.p_dark = 0.0;
        CHECK(bit_error_rate(ch, 0.5) == doctest::Approx(ch.e_mis).epsilon(1e-15));
    }
    {
        // vanishing light with dark counts: outcomes are coin flips
        ChannelSpec ch = channel_at(0.0);
        ch.eta_det = 0.0;
        CHECK(bit_error_rate(ch, 0.5) == doctest::Approx(0.5 + ch.e_mis).epsilon(1e-9));
    }
    CHECK(bit_error_rate(channel_at(50.0), 0.5) ==
          doctest::Approx(0.013968275727260109).epsilon(1e-13));
}

TEST_CASE("simulate_counts consistency identities") {
    const SourceSpec src = reference_source();
    const ChannelSpec ch = channel_at(75.0);
    const ObservedCounts o = simulate_counts(1e12, src, ch, {0.5, 0.1, 0.0});

    double total = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (int k = 0; k < 3; ++k) {
            for (int y = 0; y < 2; ++y) {
                for (int b = 0; b < 2; ++b) {
                    total += o.s[c][k][y][b];
                }
            }
        }
    }
    CHECK(o.n_det == doctest::Approx(total).epsilon(1e-15));
    CHECK(o.sift_len == doctest::Approx(o.s_zz[0] + o.s_zz[1] + o.s_zz[2]).epsilon(1e-15));
    for (Intensity k : kIntensities) {
        double zz = 0.0;
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
                zz += o.at(static_cast<Prep>(x), k, y, Basis::Z);
            }
        }
        CHECK(o.s_zz[idx(k)] == doctest::Approx(zz).epsilon(1e-15));
    }
    CHECK(o.n_det >= o.sift_len);
}

TEST_CASE("simulate_counts is linear in the pulse count") {
    const SourceSpec src = reference_source();
    const ChannelSpec ch = channel_at(30.0);
    const ObservedCounts a = simulate_counts(1e9, src, ch, {0.5, 0.1, 0.0});
    const ObservedCounts b = simulate_counts(2e9, src, ch, {0.5, 0.1, 0.0});
    for (int c = 0; c < 3; ++c) {
        for (int k = 0; k < 3; ++k) {
            for (int y = 0; y < 2; ++y) {
                for (int bb = 0; bb < 2; ++bb) {
                    CHECK(b.s[c][k][y][bb] ==
                          doctest::Approx(2.0 * a.s[c][k][y][bb]).epsilon(1e-14));
                }
            }
        }
    }
    CHECK(b.n_det == doctest::Approx(2.0 * a.n_det).epsilon(1e-14));
    CHECK(b.e_bit == a.e_bit);
}

TEST_CASE("zero pulses or a dead channel produce zero counts") {
    const SourceSpec src = reference_source();
    {
        const ObservedCounts o = simulate_counts(0.0, src, channel_at(10.0), {0.5, 0.1, 0.0});
        CHECK(o.n_det == 0.0);
        CHECK(o.sift_len == 0.0);
    }
    {
        ChannelSpec dead = channel_at(0.0);
        dead.eta_det = 0.0;
        dead.p_dark = 0.0;
        const ObservedCounts o = simulate_counts(1e10, src, dead, {0.5, 0.1, 0.0});
        CHECK(o.n_det == 0.0);
    }
}
