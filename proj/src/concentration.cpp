#include "scic/concentration.hpp"

#include <cmath>
#include <stdexcept>

namespace scic {

namespace {

void check_tail_args(double epsilon, double q) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::domain_error("g_ma: epsilon outside (0,1)");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::domain_error("g_ma: q outside [0,1]");
    }
}

double tail_fraction(double q, std::int64_t n, double eps, std::int64_t trials,
                     std::uint64_t seed, double threshold_scale, bool parallel) {
    check_tail_args(eps, q);
    if (n < 1) {
        throw std::domain_error("empirical_tail_check: n < 1");
    }
    if (trials < 1) {
        throw std::domain_error("empirical_tail_check: trials < 1");
    }
    const double threshold = threshold_scale * g_ma(eps, q, static_cast<double>(n));
    // Y_n = successes - n q, so Y_n >= t  <=>  successes >= t + n q.
    const double success_cut = threshold + static_cast<double>(n) * q;

    std::int64_t hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(static) if (parallel)
    for (std::int64_t t = 0; t < trials; ++t) {
        rng::SplitMix64 gen(rng::derive_seed(seed, static_cast<std::uint64_t>(t)));
        std::int64_t successes = 0;
        for (std::int64_t j = 0; j < n; ++j) {
            successes += gen.uniform() < q ? 1 : 0;
        }
        hits += static_cast<double>(successes) >= success_cut ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

} // namespace

double g_ma(double epsilon, double q, double n) {
    check_tail_args(epsilon, q);
    if (!(n >= 0.0)) {
        throw std::domain_error("g_ma: negative step count");
    }
    const double le = std::log(epsilon);
    return (std::sqrt(le * (le - 18.0 * n * q)) - le) / 3.0;
}

double g_ma(const TailBoundQuery& query) {
    if (query.n < 1) {
        throw std::domain_error("g_ma: n < 1");
    }
    return g_ma(query.epsilon, query.q, static_cast<double>(query.n));
}

double g_azuma(double x, double epsilon) {
    if (!(x >= 0.0)) {
        throw std::domain_error("g_azuma: negative step count");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::domain_error("g_azuma: epsilon outside (0,1)");
    }
    return std::sqrt(2.0 * x * std::log(1.0 / epsilon));
}

double empirical_tail_check(double q, std::int64_t n, double eps, std::int64_t trials,
                            std::uint64_t seed, double threshold_scale) {
    return tail_fraction(q, n, eps, trials, seed, threshold_scale, true);
}

double empirical_tail_check_serial(double q, std::int64_t n, double eps, std::int64_t trials,
                                   std::uint64_t seed, double threshold_scale) {
    return tail_fraction(q, n, eps, trials, seed, threshold_scale, false);
}

} // namespace scic
