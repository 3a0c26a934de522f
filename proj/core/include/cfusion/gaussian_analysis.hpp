#pragma once

#include "cfusion/density.hpp"

namespace cfusion {

// Independent N(mu_i, var_i) conditioned on sum_i Y_i = s.
struct GaussianConditioning {
    Vec mu_hat;
    Vec var_hat;
    double s = 0.0;
    double w2 = 0.0;
    Vec lambda;
    Vec mu_star;
    Mat sigma_star;
};

GaussianConditioning condition_on_sum(const Vec& mu_hat, const Vec& var_hat, double s);

struct MseDecomposition {
    Vec alpha;
    double psi1 = 0.0;
    double psi2 = 0.0;
    Vec variance_reduction;  // var_i^2 / w^2
    double total() const { return psi1 + psi2; }
};

// Change in total MSE when predictors with residues alpha = y - mu_hat are
// replaced by their sum-conditioned versions.
MseDecomposition mse_improvement(const Vec& alpha, const Vec& var_hat);

// |alpha_i| <= lambda_i M for all i and w^2 >= 2 (sum alpha) M.
bool uncertainty_domination_check(const Vec& alpha, const Vec& var_hat, double M);

}  // namespace cfusion
