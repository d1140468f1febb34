#pragma once

#include <cstdint>

namespace scic {

// Inputs of the modified-Azuma tail bound: target failure probability, the
// zero-difference parameter q and the number of martingale steps.
struct TailBoundQuery {
    double epsilon = 0.0; // in (0,1)
    double q = 0.0;       // in [0,1]
    std::int64_t n = 1;   // >= 1
};

/// Modified-Azuma fluctuation term
///   g_MA(eps, q, n) = ( sqrt(ln eps (ln eps - 18 n q)) - ln eps ) / 3.
/// Accepts a real-valued step count so it can be applied to expected counts.
/// Throws std::domain_error for eps outside (0,1), q outside [0,1] or n < 0.
double g_ma(double epsilon, double q, double n);

double g_ma(const TailBoundQuery& query);

/// Plain Azuma fluctuation term g_A(x, eps) = sqrt(2 x ln(1/eps)).
/// Throws std::domain_error for x < 0 or eps outside (0,1).
double g_azuma(double x, double epsilon);

/// Empirical validation harness for the modified-Azuma tail. Simulates
/// `trials` independent martingales Y_j = Y_{j-1} + (B_j - q), B_j ~
/// Bernoulli(q), and returns the fraction of trials with
/// Y_n >= threshold_scale * g_ma(eps, q, n).
///
/// Deterministic for a fixed seed independent of thread count: every trial
/// draws from its own splitmix64 stream derived from (seed, trial index).
/// threshold_scale is a negative-control hook (1.0 for real validation).
double empirical_tail_check(double q, std::int64_t n, double eps, std::int64_t trials,
                            std::uint64_t seed, double threshold_scale = 1.0);

/// Single-threaded reference of the same computation, bit-identical to the
/// parallel version.
double empirical_tail_check_serial(double q, std::int64_t n, double eps, std::int64_t trials,
                                   std::uint64_t seed, double threshold_scale = 1.0);

namespace rng {

// splitmix64: the 64-bit seeding generator of Vigna's xoshiro family.
// One instance per Monte Carlo trial keeps results schedule-independent.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform double in [0,1) with 53 random bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Decorrelates per-trial seeds from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mixer(master ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return mixer.next();
}

} // namespace rng

} // namespace scic
