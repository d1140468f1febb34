#pragma once

namespace scic {

/// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0.
/// Throws std::domain_error outside [0,1].
double binary_entropy(double x);

/// Poisson probability mass e^{-mu} mu^n / n!, evaluated in log space so it
/// stays finite for large n. Throws std::domain_error for mu < 0 or n < 0.
double poisson_pmf(int n, double mu);

} // namespace scic
