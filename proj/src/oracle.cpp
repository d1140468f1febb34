#include "scic/oracle.hpp"

#include <stdexcept>

#include "scic/numerics.hpp"

namespace scic {

namespace {

void check_mu(const SourceSpec& spec, const std::array<double, 3>& mu) {
    for (Intensity k : kIntensities) {
        if (mu[idx(k)] < spec.intensities.lo(k) || mu[idx(k)] > spec.intensities.hi(k)) {
            throw std::domain_error("oracle: intensity outside its characterised interval");
        }
    }
}

} // namespace

OracleXCounts oracle_single_photon_counts(const YieldTable& yields, const SourceSpec& spec,
                                          double n_sent, const std::array<double, 3>& mu,
                                          double p_b_x) {
    check_mu(spec, mu);
    OracleXCounts out;
    for (Prep c : kPreps) {
        const int ic = idx(c);
        for (Intensity k : kIntensities) {
            const int ik = idx(k);
            const double scale = n_sent * spec.p_prep(c) * p_b_x * spec.p_k(k);
            for (int y = 0; y < 2; ++y) {
                double count = 0.0;
                for (int n = 0; n <= kOracleMaxPhotons; ++n) {
                    count += poisson_pmf(n, mu[ik]) * yields.y[ic][n][y];
                }
                out.s_x[ic][ik][y] = scale * count;
                out.true_s1[ic][y] += scale * poisson_pmf(1, mu[ik]) * yields.y[ic][1][y];
            }
        }
    }
    return out;
}

OracleZCounts oracle_z_counts(const std::array<double, kOracleMaxPhotons + 1>& yields,
                              const SourceSpec& spec, double n_sent,
                              const std::array<double, 3>& mu, double p_b_z) {
    check_mu(spec, mu);
    OracleZCounts out;
    for (Intensity k : kIntensities) {
        const int ik = idx(k);
        const double scale = n_sent * spec.p_a_z * p_b_z * spec.p_k(k);
        double count = 0.0;
        for (int n = 0; n <= kOracleMaxPhotons; ++n) {
            count += poisson_pmf(n, mu[ik]) * yields[n];
        }
        out.s_zz[ik] = scale * count;
        out.true_s1 += scale * poisson_pmf(1, mu[ik]) * yields[1];
    }
    return out;
}

} // namespace scic
