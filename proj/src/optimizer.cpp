#include "scic/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "scic/decoy.hpp"

namespace scic {

namespace {

// total order used by the grid reduction: larger key, then smaller mu_k1,
// then smaller mu_k2; commutative and associative, so any reduction order
// produces the same argmax
bool better(const KeyRateResult& a, const KeyRateResult& b) {
    if (a.ell != b.ell) {
        return a.ell > b.ell;
    }
    if (a.mu_k1 != b.mu_k1) {
        return a.mu_k1 < b.mu_k1;
    }
    return a.mu_k2 < b.mu_k2;
}

struct GridPoint {
    double mu_k1, mu_k2;
};

std::vector<GridPoint> coarse_grid(const Scenario& sc) {
    std::vector<GridPoint> pts;
    const double mu1_max = 1.0 / (1.0 + sc.r_k1);
    for (int i = 1; 0.05 * i <= mu1_max + 1e-12; ++i) {
        const double mu1 = 0.05 * i;
        if (mu1 < 0.05 - 1e-12) {
            continue;
        }
        for (int j = 1; 0.005 * j <= mu1 / 2.0 + 1e-12; ++j) {
            pts.push_back(GridPoint{mu1, 0.005 * j});
        }
    }
    return pts;
}

KeyRateResult search(const Scenario& sc, bool parallel) {
    const std::vector<GridPoint> grid = coarse_grid(sc);
    KeyRateResult best; // aborted, ell = 0

    const auto consider = [](KeyRateResult& incumbent, const KeyRateResult& cand) {
        if (!cand.aborted && cand.ell > 0.0 &&
            (incumbent.aborted || better(cand, incumbent))) {
            incumbent = cand;
        }
    };

#pragma omp parallel if (parallel)
    {
        KeyRateResult local;
#pragma omp for schedule(dynamic, 8) nowait
        for (std::int64_t g = 0; g < static_cast<std::int64_t>(grid.size()); ++g) {
            consider(local, evaluate(sc, grid[g].mu_k1, grid[g].mu_k2));
        }
#pragma omp critical(scic_opt_reduce)
        consider(best, local);
    }

    // two refinement passes, halving the steps around the incumbent
    double step1 = 0.05, step2 = 0.005;
    for (int pass = 0; pass < 2 && !best.aborted; ++pass) {
        step1 /= 2.0;
        step2 /= 2.0;
        const double c1 = best.mu_k1, c2 = best.mu_k2;
        std::vector<GridPoint> local_pts;
        for (int i = -2; i <= 2; ++i) {
            for (int j = -2; j <= 2; ++j) {
                const double mu1 = c1 + i * step1;
                const double mu2 = c2 + j * step2;
                if (mu1 > 1e-9 && mu2 > 1e-9) {
                    local_pts.push_back(GridPoint{mu1, mu2});
                }
            }
        }
#pragma omp parallel if (parallel)
        {
            KeyRateResult local;
#pragma omp for schedule(static) nowait
            for (std::int64_t g = 0; g < static_cast<std::int64_t>(local_pts.size()); ++g) {
                consider(local, evaluate(sc, local_pts[g].mu_k1, local_pts[g].mu_k2));
            }
#pragma omp critical(scic_opt_reduce)
            consider(best, local);
        }
    }
    return best;
}

} // namespace

SourceSpec Scenario::make_source(double mu_k1, double mu_k2) const {
    SourceSpec spec;
    spec.phases = phases;
    spec.intensities.mu_minus = {mu_k1 * (1.0 - r_k1), mu_k2 * (1.0 - r_k2), 0.0};
    spec.intensities.mu_plus = {mu_k1 * (1.0 + r_k1), mu_k2 * (1.0 + r_k2), mu_k3_upper};
    spec.p_a_z = p_a_z;
    spec.p_k1 = p_k1;
    spec.p_k2 = p_k2;
    spec.p_k3 = 1.0 - p_k1 - p_k2;
    spec.n_tag = tagging == TaggingCase::II
                     ? static_cast<std::int64_t>(std::ceil(tag_rate * n_sent))
                     : 0;
    spec.p_fail = p_fail;
    return spec;
}

KeyRateResult evaluate(const Scenario& scenario, double mu_k1, double mu_k2) {
    KeyRateResult r;
    r.mu_k1 = mu_k1;
    r.mu_k2 = mu_k2;

    const SourceSpec source = scenario.make_source(mu_k1, mu_k2);
    r.violations = validate(source);
    if (!r.violations.empty()) {
        return r;
    }
    const EpsilonBudget budget =
        scenario.p_fail > 0.0 ? with_p_fail(scenario.budget, scenario.p_fail) : scenario.budget;

    const ObservedCounts counts =
        simulate_counts(scenario.n_sent, source, scenario.channel, {mu_k1, mu_k2, 0.0});
    r.e_bit = counts.e_bit;
    r.n_det = counts.n_det;

    const double p_b_z = scenario.channel.p_b_z;
    const double p_b_x = 1.0 - p_b_z;

    const Estimate s1 =
        s1_lower_zz(counts, source, budget.decoy, p_b_z, scenario.fluct);
    r.s1l = s1.value;
    r.clamped = s1.clamped;

    const GammaSet gammas =
        make_gamma_set(scenario.gamma_mode, scenario.phases, scenario.p_a_z, p_b_z);

    // pick the estimate per sign rule; cell (c, y) feeds the alpha = y^1 term
    double s_prime[3][2];
    for (Prep c : kPreps) {
        for (int y = 0; y < 2; ++y) {
            const int alpha = y ^ 1;
            const Estimate e =
                gammas.gamma[alpha][idx(c)] > 0.0
                    ? sx_upper(c, y, counts, source, budget.decoy, p_b_x, scenario.fluct)
                    : sx_lower(c, y, counts, source, budget.decoy, p_b_x, scenario.fluct);
            s_prime[idx(c)][y] = e.value;
            r.clamped = r.clamped || e.clamped;
        }
    }

    const std::array<double, 3> p_c = {source.p_prep(Prep::Z0), source.p_prep(Prep::Z1),
                                       source.p_prep(Prep::X0)};
    r.nphu = n_ph_upper(s_prime, gammas, counts.n_det, p_c, p_b_x, budget.a_x1, budget.a_ph,
                        scenario.fluct.asymptotic);
    r.e_phu = r.s1l > 0.0 ? std::clamp(r.nphu / r.s1l, 0.0, 0.5) : 0.0;
    r.lambda_ec = ec_cost(counts.sift_len, counts.e_bit, budget.eps_c);

    const KeyLength kl = key_length(r.s1l, r.nphu, budget, r.lambda_ec);
    r.ell = kl.ell;
    r.aborted = kl.aborted;
    r.rate = scenario.n_sent > 0.0 ? r.ell / scenario.n_sent : 0.0;
    return r;
}

KeyRateResult optimize(const Scenario& scenario) { return search(scenario, true); }

KeyRateResult optimize_serial(const Scenario& scenario) { return search(scenario, false); }

std::vector<ScanRow> scan(const Scenario& base, std::span<const double> lengths_km,
                          std::span<const double> n_sents) {
    std::vector<ScanRow> rows;
    const double n_max = n_sents.empty() ? base.n_sent : *std::max_element(n_sents.begin(),
                                                                            n_sents.end());
    if (!base.fluct.asymptotic) {
        for (double n : n_sents) {
            for (double l : lengths_km) {
                Scenario sc = base;
                sc.n_sent = n;
                sc.channel.fiber_length_km = l;
                rows.push_back(ScanRow{l, n, sc.tagging, false, optimize(sc)});
            }
        }
    }
    for (double l : lengths_km) {
        Scenario sc = base;
        sc.n_sent = n_max;
        sc.channel.fiber_length_km = l;
        sc.fluct.asymptotic = true;
        rows.push_back(ScanRow{l, n_max, sc.tagging, true, optimize(sc)});
    }
    return rows;
}

} // namespace scic
