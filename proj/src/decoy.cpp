#include "scic/decoy.hpp"

#include <algorithm>
#include <cmath>

#include "scic/concentration.hpp"
#include "scic/errors.hpp"

namespace scic {

namespace {

double fluct(double eps, double raw_count, double q_basis, const ObservedCounts& counts,
             const FluctuationOptions& opt) {
    if (opt.asymptotic) {
        return 0.0;
    }
    const double q = opt.q_mode == QMode::Basis
                         ? q_basis
                         : std::min(std::max(raw_count, 0.0) / counts.n_det, 1.0);
    return g_ma(eps, q, counts.n_det);
}

Estimate clamp_estimate(double value, double ceiling) {
    Estimate e;
    e.value = std::clamp(value, 0.0, ceiling);
    e.clamped = value != e.value;
    return e;
}

// The shared three-intensity lower combination. The adjusted counts already
// carry the N_tag subtraction and the fluctuation terms.
double lower_combo(const SourceSpec& spec, double s_k2_adj, double s_k3_adj, double s_k1_adj) {
    const IntensityIntervals& in = spec.intensities;
    const double m1l = in.lo(Intensity::k1), m1h = in.hi(Intensity::k1);
    const double m2l = in.lo(Intensity::k2), m2h = in.hi(Intensity::k2);
    const double m3l = in.lo(Intensity::k3), m3h = in.hi(Intensity::k3);

    const double denom = (m2h - m3l) * (m1l - m2h - m3l);
    if (!(denom > 0.0)) {
        throw infeasible_error("decoy lower bound: nonpositive interval denominator");
    }
    const double pref = m1l * pois1_mixture(BoundSide::Lower, spec) / denom;
    const double bracket = std::exp(m2l) * s_k2_adj / spec.p_k(Intensity::k2) -
                           std::exp(m3h) * s_k3_adj / spec.p_k(Intensity::k3) -
                           (m2h * m2h - m3l * m3l) / (m1l * m1l) *
                               (std::exp(m1h) * s_k1_adj / spec.p_k(Intensity::k1));
    return pref * bracket;
}

double trailing_sign(const FluctuationOptions& opt) {
    return opt.conservative_trailing ? -1.0 : 1.0;
}

} // namespace

Estimate s1_lower_zz(const ObservedCounts& counts, const SourceSpec& spec,
                     const DecoyEpsilons& eps, double p_b_z, const FluctuationOptions& opt) {
    const double s1 = counts.s_zz[idx(Intensity::k1)];
    const double s2 = counts.s_zz[idx(Intensity::k2)];
    const double s3 = counts.s_zz[idx(Intensity::k3)];
    const double total = s1 + s2 + s3;
    const double n_tag = static_cast<double>(spec.n_tag);

    const double value =
        lower_combo(spec,
                    (s2 - n_tag) - fluct(eps.ma_z_k[1], s2, p_b_z, counts, opt),
                    s3 + fluct(eps.ma_z_k[2], s3, p_b_z, counts, opt),
                    s1 + fluct(eps.ma_z_k[0], s1, p_b_z, counts, opt)) +
        trailing_sign(opt) * fluct(eps.ma_z_1, total, p_b_z, counts, opt);
    return clamp_estimate(value, total);
}

Estimate sx_upper(Prep c, int y, const ObservedCounts& counts, const SourceSpec& spec,
                  const DecoyEpsilons& eps, double p_b_x, const FluctuationOptions& opt) {
    const double s1 = counts.x_count(c, Intensity::k1, y);
    const double s2 = counts.x_count(c, Intensity::k2, y);
    const double s3 = counts.x_count(c, Intensity::k3, y);
    const double total = s1 + s2 + s3;
    const double n_tag = static_cast<double>(spec.n_tag);

    const double denom = pois_bound(1, Intensity::k2, BoundSide::Lower, spec) *
                             pois_bound(0, Intensity::k3, BoundSide::Upper, spec) -
                         pois_bound(1, Intensity::k3, BoundSide::Upper, spec) *
                             pois_bound(0, Intensity::k2, BoundSide::Lower, spec);
    if (!(denom > 0.0)) {
        throw infeasible_error("decoy upper bound: nonpositive interval denominator");
    }

    const int ic = idx(c);
    const double num =
        (s2 + fluct(eps.ma_x[ic][1][y], s2, p_b_x, counts, opt)) *
            pois_bound(0, Intensity::k3, BoundSide::Upper, spec) / spec.p_k(Intensity::k2) -
        ((s3 - n_tag) - fluct(eps.ma_x[ic][2][y], s3, p_b_x, counts, opt)) *
            pois_bound(0, Intensity::k2, BoundSide::Lower, spec) / spec.p_k(Intensity::k3);
    const double value = num / denom * pois1_mixture(BoundSide::Upper, spec) +
                         fluct(eps.ma_x1[ic][y], total, p_b_x, counts, opt);
    return clamp_estimate(value, total);
}

Estimate sx_lower(Prep c, int y, const ObservedCounts& counts, const SourceSpec& spec,
                  const DecoyEpsilons& eps, double p_b_x, const FluctuationOptions& opt) {
    const double s1 = counts.x_count(c, Intensity::k1, y);
    const double s2 = counts.x_count(c, Intensity::k2, y);
    const double s3 = counts.x_count(c, Intensity::k3, y);
    const double total = s1 + s2 + s3;
    const double n_tag = static_cast<double>(spec.n_tag);
    const int ic = idx(c);

    const double value =
        lower_combo(spec,
                    (s2 - n_tag) - fluct(eps.ma_x[ic][1][y], s2, p_b_x, counts, opt),
                    s3 + fluct(eps.ma_x[ic][2][y], s3, p_b_x, counts, opt),
                    s1 + fluct(eps.ma_x[ic][0][y], s1, p_b_x, counts, opt)) +
        trailing_sign(opt) * fluct(eps.ma_x1[ic][y], total, p_b_x, counts, opt);
    return clamp_estimate(value, total);
}

} // namespace scic
