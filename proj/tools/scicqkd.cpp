#include <array>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scic/concentration.hpp"
#include "scic/config.hpp"
#include "scic/csv.hpp"
#include "scic/errors.hpp"
#include "scic/oracle.hpp"
#include "scic/decoy.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitValidation = 4;

// scenario-level feasibility that does not depend on the optimized
// intensities: phases, probabilities, tagging budget
std::vector<scic::Violation> scenario_violations(const scic::RunConfig& cfg) {
    const bool fixed = cfg.fixed_mu_k1.has_value();
    const double mu1 = fixed ? *cfg.fixed_mu_k1 : 0.5;
    const double mu2 = fixed ? *cfg.fixed_mu_k2 : 0.1;
    std::vector<scic::Violation> all = scic::validate(cfg.scenario.make_source(mu1, mu2));
    if (fixed) {
        return all;
    }
    std::vector<scic::Violation> kept;
    for (auto& v : all) {
        if (v.code.rfind("intensity.", 0) != 0 || v.code == "intensity.order") {
            kept.push_back(std::move(v));
        }
    }
    return kept;
}

int run_command(const std::string& config_path, bool asymptotic, const std::string& case_override,
                const std::string& out_override, const std::string& plot_override) {
    scic::RunConfig cfg = scic::parse_config_file(config_path);
    if (asymptotic) {
        cfg.scenario.fluct.asymptotic = true;
    }
    if (!case_override.empty()) {
        if (case_override == "I") {
            cfg.scenario.tagging = scic::TaggingCase::I;
        } else if (case_override == "II") {
            cfg.scenario.tagging = scic::TaggingCase::II;
        } else {
            throw scic::config_error("--case must be I or II");
        }
    }
    if (!out_override.empty()) {
        cfg.csv_path = out_override;
    }
    if (!plot_override.empty()) {
        cfg.plot_path = plot_override;
    }

    const std::vector<scic::Violation> violations = scenario_violations(cfg);
    if (!violations.empty()) {
        std::cerr << "infeasible source specification:\n";
        for (const auto& v : violations) {
            std::cerr << "  [" << v.code << "] " << v.message << "\n";
        }
        return kExitInfeasible;
    }

    std::vector<scic::ScanRow> rows;
    if (cfg.fixed_mu_k1) {
        // pinned intensities: evaluate directly, no optimization
        const double n_max = *std::max_element(cfg.n_sents.begin(), cfg.n_sents.end());
        if (!cfg.scenario.fluct.asymptotic) {
            for (double n : cfg.n_sents) {
                for (double l : cfg.lengths_km) {
                    scic::Scenario sc = cfg.scenario;
                    sc.n_sent = n;
                    sc.channel.fiber_length_km = l;
                    rows.push_back(scic::ScanRow{
                        l, n, sc.tagging, false,
                        scic::evaluate(sc, *cfg.fixed_mu_k1, *cfg.fixed_mu_k2)});
                }
            }
        }
        for (double l : cfg.lengths_km) {
            scic::Scenario sc = cfg.scenario;
            sc.n_sent = n_max;
            sc.channel.fiber_length_km = l;
            sc.fluct.asymptotic = true;
            rows.push_back(scic::ScanRow{l, n_max, sc.tagging, true,
                                         scic::evaluate(sc, *cfg.fixed_mu_k1, *cfg.fixed_mu_k2)});
        }
    } else {
        rows = scic::scan(cfg.scenario, cfg.lengths_km, cfg.n_sents);
    }

    scic::write_file(cfg.csv_path, scic::scan_to_csv(rows));
    if (!cfg.plot_path.empty()) {
        scic::write_file(cfg.plot_path, scic::scan_to_svg(rows));
    }
    std::cout << "wrote " << rows.size() << " rows to " << cfg.csv_path << "\n";
    return kExitOk;
}

int validate_command(std::uint64_t seed, std::int64_t trials, double gma_scale) {
    if (trials <= 0) {
        std::cerr << "validate: --trials must be positive\n";
        return kExitConfig;
    }
    int failures = 0;

    struct TailCase {
        double q;
        std::int64_t n;
        double eps;
    };
    const std::array<TailCase, 3> cases{TailCase{0.5, 10000, 0.01}, TailCase{0.1, 10000, 0.05},
                                        TailCase{0.8, 10000, 0.01}};
    for (size_t i = 0; i < cases.size(); ++i) {
        const TailCase& tc = cases[i];
        const double freq =
            scic::empirical_tail_check(tc.q, tc.n, tc.eps, trials, seed + i, gma_scale);
        const double limit = tc.eps + 3.0 * std::sqrt(tc.eps / static_cast<double>(trials));
        const bool ok = freq <= limit;
        std::cout << "tail q=" << tc.q << " n=" << tc.n << " eps=" << tc.eps << ": freq=" << freq
                  << " limit=" << limit << (ok ? " ok" : " FAIL") << "\n";
        failures += ok ? 0 : 1;
    }

    // decoy sandwich against the brute-force IID oracle, asymptotic mode
    scic::Scenario sc; // reference source geometry
    std::int64_t bad = 0;
    const std::int64_t tables = 1000;
    for (std::int64_t t = 0; t < tables; ++t) {
        scic::rng::SplitMix64 gen(scic::rng::derive_seed(seed ^ 0xdec91ull, t));
        const scic::SourceSpec spec = sc.make_source(0.5, 0.1);
        const std::array<double, 3> mu = {
            spec.intensities.lo(scic::Intensity::k1) +
                gen.uniform() * (spec.intensities.hi(scic::Intensity::k1) -
                                 spec.intensities.lo(scic::Intensity::k1)),
            spec.intensities.lo(scic::Intensity::k2) +
                gen.uniform() * (spec.intensities.hi(scic::Intensity::k2) -
                                 spec.intensities.lo(scic::Intensity::k2)),
            gen.uniform() * spec.intensities.hi(scic::Intensity::k3)};
        scic::YieldTable yields;
        for (int c = 0; c < 3; ++c) {
            for (int n = 0; n <= scic::kOracleMaxPhotons; ++n) {
                for (int y = 0; y < 2; ++y) {
                    yields.y[c][n][y] = gen.uniform();
                }
            }
        }
        const double p_b_x = 1.0 - sc.channel.p_b_z;
        const scic::OracleXCounts ox =
            scic::oracle_single_photon_counts(yields, spec, 1e10, mu, p_b_x);

        scic::ObservedCounts counts;
        counts.n_sent = 1e10;
        counts.n_det = 1.0;
        for (int c = 0; c < 3; ++c) {
            for (int k = 0; k < 3; ++k) {
                for (int y = 0; y < 2; ++y) {
                    counts.s[c][k][y][idx(scic::Basis::X)] = ox.s_x[c][k][y];
                    counts.n_det += ox.s_x[c][k][y];
                }
            }
        }
        scic::FluctuationOptions asym;
        asym.asymptotic = true;
        for (scic::Prep c : scic::kPreps) {
            for (int y = 0; y < 2; ++y) {
                const double truth = ox.true_s1[scic::idx(c)][y];
                const double up =
                    scic::sx_upper(c, y, counts, spec, sc.budget.decoy, p_b_x, asym).value;
                const double lo =
                    scic::sx_lower(c, y, counts, spec, sc.budget.decoy, p_b_x, asym).value;
                const double slack = 1e-9 * std::max(1.0, truth);
                if (lo > truth + slack || up < truth - slack) {
                    ++bad;
                }
            }
        }
    }
    std::cout << "decoy sandwich: " << tables << " tables, " << bad << " violations"
              << (bad == 0 ? " ok" : " FAIL") << "\n";
    failures += bad == 0 ? 0 : 1;

    return failures == 0 ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-key security-rate engine for the loss-tolerant three-state "
                 "decoy-state protocol with interval-characterised sources"};
    app.require_subcommand(1);

    std::string config_path;
    bool asymptotic = false;
    std::string case_override, out_override, plot_override;
    CLI::App* run = app.add_subcommand("run", "evaluate a configuration and write the CSV table");
    run->add_option("config", config_path, "configuration file")->required();
    run->add_flag("--asymptotic", asymptotic, "drop all statistical fluctuation terms");
    run->add_option("--case", case_override, "tagging case override (I or II)");
    run->add_option("--out", out_override, "CSV output path override");
    run->add_option("--plot", plot_override, "also write an SVG rate plot");

    std::uint64_t seed = 1;
    std::int64_t trials = 100000;
    double gma_scale = 1.0;
    CLI::App* val = app.add_subcommand(
        "validate", "run the concentration-bound and decoy-sandwich validation harnesses");
    val->add_option("--seed", seed, "master seed");
    val->add_option("--trials", trials, "martingale trials per tail case");
    val->add_option("--gma-scale", gma_scale,
                    "threshold scale hook for negative-control runs (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (run->parsed()) {
            return run_command(config_path, asymptotic, case_override, out_override,
                               plot_override);
        }
        return validate_command(seed, trials, gma_scale);
    } catch (const scic::infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
