#include "scic/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace scic {

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("binary_entropy: argument outside [0,1]");
    }
    if (x == 0.0 || x == 1.0) {
        return 0.0;
    }
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double poisson_pmf(int n, double mu) {
    if (n < 0) {
        throw std::domain_error("poisson_pmf: negative photon number");
    }
    if (!(mu >= 0.0)) {
        throw std::domain_error("poisson_pmf: negative intensity");
    }
    if (mu == 0.0) {
        return n == 0 ? 1.0 : 0.0;
    }
    return std::exp(-mu + n * std::log(mu) - std::lgamma(n + 1.0));
}

} // namespace scic
