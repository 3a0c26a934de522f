#include "cfusion/gaussian_analysis.hpp"

#include <stdexcept>

namespace cfusion {

namespace {
void check(const Vec& a, const Vec& var) {
    if (a.size() != var.size() || var.size() < 1) throw std::invalid_argument("gaussian_analysis: size mismatch");
    if (!(var.array() > 0.0).all()) throw std::invalid_argument("gaussian_analysis: variances must be positive");
}
}  // namespace

GaussianConditioning condition_on_sum(const Vec& mu_hat, const Vec& var_hat, double s) {
    check(mu_hat, var_hat);
    GaussianConditioning g;
    g.mu_hat = mu_hat;
    g.var_hat = var_hat;
    g.s = s;
    g.w2 = var_hat.sum();
    g.lambda = var_hat / g.w2;
    g.mu_star = mu_hat + g.lambda * (s - mu_hat.sum());
    g.sigma_star = Mat(var_hat.asDiagonal()) - var_hat * var_hat.transpose() / g.w2;
    return g;
}

MseDecomposition mse_improvement(const Vec& alpha, const Vec& var_hat) {
    check(alpha, var_hat);
    MseDecomposition m;
    m.alpha = alpha;
    const double w2 = var_hat.sum();
    const Vec lambda = var_hat / w2;
    const double total = alpha.sum();
    m.psi1 = alpha.squaredNorm() - (alpha - lambda * total).squaredNorm();
    m.variance_reduction = var_hat.array().square() / w2;
    m.psi2 = m.variance_reduction.sum();
    return m;
}

bool uncertainty_domination_check(const Vec& alpha, const Vec& var_hat, double M) {
    check(alpha, var_hat);
    if (!(M > 0.0)) throw std::invalid_argument("uncertainty_domination_check: M must be positive");
    const double w2 = var_hat.sum();
    const Vec lambda = var_hat / w2;
    for (Eigen::Index i = 0; i < alpha.size(); ++i) {
        if (std::abs(alpha[i]) > lambda[i] * M) return false;
    }
    return w2 >= 2.0 * alpha.sum() * M;
}

}  // namespace cfusion
