#pragma once

#include <array>

#include "scic/source_model.hpp"

namespace scic {

// Brute-force IID reference for the decoy estimators: expected counts are
// assembled directly from per-photon-number yields, so the true
// single-photon contribution is known exactly and the decoy sandwich can be
// checked against it. Photon numbers are truncated at 20; the neglected
// Poisson tail at mu <= 1 is below 1e-19.
constexpr int kOracleMaxPhotons = 20;

// Yield table y[c][n][outcome] in [0,1] for the X-basis measurement.
struct YieldTable {
    double y[3][kOracleMaxPhotons + 1][2] = {};
};

struct OracleXCounts {
    double s_x[3][3][2] = {};   // [c][k][y] expected counts, b = X
    double true_s1[3][2] = {};  // true single-photon contribution per (c,y)
};

/// Expected X-basis counts N p(c) p_B_X p_k sum_n P(n|mu_k) Y[c][n][y] and
/// the exact n=1 part. mu[k] must lie inside the spec's interval for k
/// (throws std::domain_error otherwise).
OracleXCounts oracle_single_photon_counts(const YieldTable& yields, const SourceSpec& spec,
                                          double n_sent, const std::array<double, 3>& mu,
                                          double p_b_x);

struct OracleZCounts {
    std::array<double, 3> s_zz{0, 0, 0};
    double true_s1 = 0.0;
};

/// Z-basis analogue with an aggregated yield per photon number.
OracleZCounts oracle_z_counts(const std::array<double, kOracleMaxPhotons + 1>& yields,
                              const SourceSpec& spec, double n_sent,
                              const std::array<double, 3>& mu, double p_b_z);

} // namespace scic
