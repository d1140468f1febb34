#include "scic/key_length.hpp"

#include <algorithm>
#include <cmath>

#include "scic/errors.hpp"
#include "scic/numerics.hpp"

namespace scic {

double EpsilonBudget::composed_eps_z() const {
    return decoy.ma_z_k[0] + decoy.ma_z_k[1] + decoy.ma_z_k[2] + decoy.ma_z_1 + p_fail;
}

double EpsilonBudget::composed_eps_ph(const bool used_upper[3][2]) const {
    double eps_ph1 = a_ph;
    for (int c = 0; c < 3; ++c) {
        for (int y = 0; y < 2; ++y) {
            eps_ph1 += a_x1[c][y];
        }
    }
    double eps_ph2 = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (int y = 0; y < 2; ++y) {
            // upper bound: k2 and k3 counters; lower bound: all three
            eps_ph2 += decoy.ma_x[c][1][y] + decoy.ma_x[c][2][y];
            if (!used_upper[c][y]) {
                eps_ph2 += decoy.ma_x[c][0][y];
            }
            eps_ph2 += decoy.ma_x1[c][y];
        }
    }
    return eps_ph1 + eps_ph2;
}

double EpsilonBudget::composed_eps_s(const bool used_upper[3][2]) const {
    return std::sqrt(2.0) * std::sqrt(eps_pa + composed_eps_ph(used_upper)) + composed_eps_z();
}

EpsilonBudget default_budget(double eps_s_target, double eps_c) {
    if (!(eps_s_target > 0.0 && eps_s_target < 1.0) || !(eps_c > 0.0 && eps_c < 1.0)) {
        throw std::domain_error("default_budget: targets must lie in (0,1)");
    }
    EpsilonBudget b;
    b.eps_s = eps_s_target;
    b.eps_c = eps_c;
    b.eps_z = eps_s_target / 2.0;
    b.eps_pa = eps_s_target * eps_s_target / 16.0;
    b.eps_ph = b.eps_pa;
    b.p_fail = 0.0;

    const double z_term = b.eps_z / 4.0;
    b.decoy.ma_z_k = {z_term, z_term, z_term};
    b.decoy.ma_z_1 = z_term;

    const double ph_term = b.eps_ph / 26.0;
    for (int c = 0; c < 3; ++c) {
        for (int y = 0; y < 2; ++y) {
            for (int k = 0; k < 3; ++k) {
                b.decoy.ma_x[c][k][y] = ph_term;
            }
            b.decoy.ma_x1[c][y] = ph_term;
            b.a_x1[c][y] = ph_term;
        }
    }
    b.a_ph = ph_term;

    // the reference sign pattern: every gamma positive except (1, 0X),
    // i.e. the lower bound is taken only for the (0X, y=0) cell
    bool used_upper[3][2] = {{true, true}, {true, true}, {false, true}};
    const double composed = b.composed_eps_s(used_upper);
    if (composed > eps_s_target * (1.0 + 1e-9)) {
        throw infeasible_error("default_budget: composition exceeds the secrecy target");
    }
    return b;
}

EpsilonBudget with_p_fail(EpsilonBudget budget, double p_fail) {
    if (!(p_fail >= 0.0)) {
        throw std::domain_error("with_p_fail: negative p_fail");
    }
    if (p_fail >= budget.eps_z) {
        throw infeasible_error("with_p_fail: p_fail consumes the entire eps_Z budget");
    }
    budget.p_fail = p_fail;
    const double z_term = (budget.eps_z - p_fail) / 4.0;
    budget.decoy.ma_z_k = {z_term, z_term, z_term};
    budget.decoy.ma_z_1 = z_term;
    return budget;
}

double ec_cost(double sift_len, double e_bit, double eps_c) {
    if (!(sift_len >= 0.0)) {
        throw std::domain_error("ec_cost: negative sifted length");
    }
    return 1.05 * sift_len * binary_entropy(e_bit) + std::log2(1.0 / eps_c);
}

KeyLength key_length(double s1l, double nphu, const EpsilonBudget& budget, double lambda_ec) {
    KeyLength out;
    if (!(s1l > 0.0)) {
        out.aborted = true;
        return out;
    }
    const double ratio = std::clamp(nphu / s1l, 0.0, 0.5);
    const double ell = s1l * (1.0 - binary_entropy(ratio)) - std::log2(2.0 / budget.eps_pa) -
                       lambda_ec;
    if (ell <= 0.0) {
        out.aborted = true;
        return out;
    }
    out.ell = ell;
    return out;
}

} // namespace scic
