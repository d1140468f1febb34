#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "scic/concentration.hpp"

using namespace scic;

TEST_CASE("g_ma closed form") {
    // q = 0 collapses the radical to |ln eps|
    for (double eps : {1e-10, 1e-3, 0.5}) {
        CHECK(g_ma(eps, 0.0, 12345.0) ==
              doctest::Approx(-2.0 / 3.0 * std::log(eps)).epsilon(1e-14));
    }
    // frozen 30-digit evaluations
    CHECK(g_ma(1e-10, 0.8, 1e6) == doctest::Approx(6077.3886539668032).epsilon(1e-13));
    CHECK(g_ma(1e-10, 0.1, 1e6) == doctest::Approx(2153.6550356370495).epsilon(1e-13));
    CHECK(g_ma(TailBoundQuery{1e-10, 0.8, 1000000}) ==
          doctest::Approx(6077.3886539668032).epsilon(1e-13));

    CHECK_THROWS_AS(g_ma(0.0, 0.5, 10.0), std::domain_error);
    CHECK_THROWS_AS(g_ma(1.0, 0.5, 10.0), std::domain_error);
    CHECK_THROWS_AS(g_ma(0.5, -0.1, 10.0), std::domain_error);
    CHECK_THROWS_AS(g_ma(0.5, 1.1, 10.0), std::domain_error);
    CHECK_THROWS_AS(g_ma(TailBoundQuery{0.5, 0.5, 0}), std::domain_error);
}

TEST_CASE("g_azuma closed form") {
    CHECK(g_azuma(0.0, 0.5) == 0.0);
    CHECK(g_azuma(1e6, 1e-10) == doctest::Approx(6786.1404244151118).epsilon(1e-13));
    CHECK(g_azuma(5e5, std::exp(-1.0)) == doctest::Approx(std::sqrt(1e6)).epsilon(1e-13));
    CHECK_THROWS_AS(g_azuma(-1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(g_azuma(1.0, 0.0), std::domain_error);
}

TEST_CASE("bound monotonicity") {
    CHECK(g_ma(1e-8, 0.3, 2e5) >= g_ma(1e-8, 0.3, 1e5));
    CHECK(g_ma(1e-8, 0.6, 1e5) >= g_ma(1e-8, 0.3, 1e5));
    CHECK(g_ma(1e-10, 0.3, 1e5) >= g_ma(1e-8, 0.3, 1e5));
    CHECK(g_ma(1e-8, 0.3, 1e5) >= g_ma(1e-8, 0.0, 1e5));
    CHECK(g_azuma(2e5, 1e-8) >= g_azuma(1e5, 1e-8));
    CHECK(g_azuma(1e5, 1e-10) >= g_azuma(1e5, 1e-8));
}

TEST_CASE("empirical tail: q = 0 never moves") {
    CHECK(empirical_tail_check(0.0, 100, 0.01, 1000, 7) == 0.0);
}

TEST_CASE("empirical tail frequency stays below the bound") {
    const std::int64_t trials = 20000; // the full 1e5-trial runs live in acceptance
    struct Case {
        double q, eps;
        std::uint64_t seed;
    };
    for (const Case& c : {Case{0.5, 0.01, 1}, Case{0.1, 0.05, 2}}) {
        const double freq = empirical_tail_check(c.q, 10000, c.eps, trials, c.seed);
        CHECK(freq <= c.eps + 3.0 * std::sqrt(c.eps / trials));
    }
}

TEST_CASE("parallel and serial harnesses agree bit for bit") {
    const double a = empirical_tail_check(0.5, 2000, 0.05, 4000, 42);
    const double b = empirical_tail_check_serial(0.5, 2000, 0.05, 4000, 42);
    CHECK(a == b);
    // regression guard: identical seed gives identical frequency across runs
    CHECK(a == empirical_tail_check(0.5, 2000, 0.05, 4000, 42));
}

TEST_CASE("negative control: a shrunken threshold breaks the bound") {
    const double freq = empirical_tail_check(0.5, 1000, 0.01, 2000, 3, 0.02);
    CHECK(freq > 0.01 + 3.0 * std::sqrt(0.01 / 2000.0));
}
