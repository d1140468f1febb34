// Compares the OpenMP kernels against their serial references and reports
// speedups. Build target only; not part of the test suite.

#include <chrono>
#include <cstdio>

#include "scic/concentration.hpp"
#include "scic/config.hpp"
#include "scic/optimizer.hpp"

using clk = std::chrono::steady_clock;

namespace {

double seconds_since(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

} // namespace

int main() {
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");

    {
        const auto t0 = clk::now();
        const double fs = scic::empirical_tail_check_serial(0.5, 10000, 0.01, 20000, 1);
        const double ts = seconds_since(t0);
        const auto t1 = clk::now();
        const double fp = scic::empirical_tail_check(0.5, 10000, 0.01, 20000, 1);
        const double tp = seconds_since(t1);
        std::printf("%-34s %10.3f %10.3f %7.2fx%s\n", "tail harness (2e4 x 1e4 steps)", ts, tp,
                    ts / tp, fs == fp ? "" : "  MISMATCH");
    }

    {
        scic::Scenario sc = scic::default_run_config().scenario;
        sc.channel.fiber_length_km = 50.0;
        sc.n_sent = 1e12;
        const auto t0 = clk::now();
        const scic::KeyRateResult rs = scic::optimize_serial(sc);
        const double ts = seconds_since(t0);
        const auto t1 = clk::now();
        const scic::KeyRateResult rp = scic::optimize(sc);
        const double tp = seconds_since(t1);
        const bool same = rs.ell == rp.ell && rs.mu_k1 == rp.mu_k1 && rs.mu_k2 == rp.mu_k2;
        std::printf("%-34s %10.3f %10.3f %7.2fx%s\n", "intensity grid search (50 km)", ts, tp,
                    ts / tp, same ? "" : "  MISMATCH");
    }

    {
        scic::Scenario sc = scic::default_run_config().scenario;
        sc.fluct.asymptotic = true;
        const double lengths[] = {0, 25, 50, 75, 100};
        const double ns[] = {1e12};
        const auto t0 = clk::now();
        (void)scic::scan(sc, lengths, ns);
        std::printf("%-34s %10s %10.3f\n", "asymptotic distance scan (5 pts)", "-",
                    seconds_since(t0));
    }
    return 0;
}
