#pragma once

#include <span>
#include <vector>

#include "scic/channel_sim.hpp"
#include "scic/key_length.hpp"
#include "scic/phase_error.hpp"

namespace scic {

enum class TaggingCase { I, II };

// One point of the rate study: everything except the two free intensities.
struct Scenario {
    PhaseIntervals phases = PhaseIntervals::symmetric(0.03);
    double r_k1 = 0.03, r_k2 = 0.03; // relative intensity fluctuation
    double mu_k3_upper = 1e-3;       // weak decoy interval [0, mu_k3_upper]
    double p_a_z = 0.8;
    double p_k1 = 0.8, p_k2 = 0.1;
    ChannelSpec channel;
    EpsilonBudget budget;
    double n_sent = 1e12;
    TaggingCase tagging = TaggingCase::I;
    double tag_rate = 1e-7; // case II: N_tag = ceil(tag_rate * n_sent)
    double p_fail = 0.0;
    FluctuationOptions fluct;
    GammaMode gamma_mode = GammaMode::Automatic;

    SourceSpec make_source(double mu_k1, double mu_k2) const;
};

struct KeyRateResult {
    double s1l = 0.0;
    double nphu = 0.0;
    double e_phu = 0.0;
    double lambda_ec = 0.0;
    double ell = 0.0;
    double rate = 0.0;
    double e_bit = 0.0;
    double n_det = 0.0;
    double mu_k1 = 0.0, mu_k2 = 0.0;
    bool aborted = true;
    bool clamped = false;
    std::vector<Violation> violations; // nonempty when the intensities were infeasible
};

/// Full pipeline at fixed intensities: build the source spec, simulate
/// counts, run the decoy bounds with the sign-rule selection, bound the
/// phase errors and evaluate the key length. Infeasible intervals yield an
/// aborted result carrying the violation list.
KeyRateResult evaluate(const Scenario& scenario, double mu_k1, double mu_k2);

/// Deterministic coarse-to-fine grid search over (mu_k1, mu_k2):
/// coarse grid mu_k1 in [0.05, 1/(1+r_k1)] step 0.05 and
/// mu_k2 in [0.005, mu_k1/2] step 0.005, then two refinement passes halving
/// both steps around the incumbent (+-2 steps each). Ties prefer smaller
/// mu_k1, then smaller mu_k2. Evaluations run in parallel; the reduction is
/// order-independent, so the result matches optimize_serial bit for bit.
KeyRateResult optimize(const Scenario& scenario);

/// Single-threaded reference of the same search.
KeyRateResult optimize_serial(const Scenario& scenario);

struct ScanRow {
    double length_km = 0.0;
    double n_sent = 0.0;
    TaggingCase tagging = TaggingCase::I;
    bool asymptotic = false;
    KeyRateResult result;
};

/// Optimized rates over a (length, n_sent) grid. Finite rows cover the full
/// product; one asymptotic row per length is evaluated at the largest
/// n_sent. When the scenario itself is asymptotic only the asymptotic rows
/// are produced.
std::vector<ScanRow> scan(const Scenario& base, std::span<const double> lengths_km,
                          std::span<const double> n_sents);

} // namespace scic
