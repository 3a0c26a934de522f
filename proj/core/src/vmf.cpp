#include "cfusion/vmf.hpp"

#include <cmath>
#include <stdexcept>

#include "cfusion/special.hpp"

namespace cfusion {

namespace {

Vec orthogonal_unit(const Vec& mu, Rng& rng) {
    for (;;) {
        Vec v(mu.size());
        for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
        v -= v.dot(mu) * mu;
        const double n = v.norm();
        if (n > 1e-12) return v / n;
    }
}

double beta_variate(double a, double b, Rng& rng) {
    const double la = rng.log_gamma_variate(a);
    const double lb = rng.log_gamma_variate(b);
    const double m = std::max(la, lb);
    return std::exp(la - m) / (std::exp(la - m) + std::exp(lb - m));
}

}  // namespace

Vec sample_vmf_unit(const Vec& mu, double kappa, Rng& rng) {
    const auto p = static_cast<double>(mu.size());
    if (mu.size() < 2) throw std::invalid_argument("sample_vmf: dimension must be >= 2");
    if (!(kappa >= 0.0)) throw std::invalid_argument("sample_vmf: kappa must be >= 0");
    double w;
    if (kappa == 0.0) {
        w = 2.0 * beta_variate(0.5 * (p - 1.0), 0.5 * (p - 1.0), rng) - 1.0;
    } else {
        // Wood's rejection sampler for the cosine coordinate.
        const double b = (p - 1.0) / (2.0 * kappa + std::sqrt(4.0 * kappa * kappa + (p - 1.0) * (p - 1.0)));
        const double x0 = (1.0 - b) / (1.0 + b);
        const double c = kappa * x0 + (p - 1.0) * std::log1p(-x0 * x0);
        for (;;) {
            const double z = beta_variate(0.5 * (p - 1.0), 0.5 * (p - 1.0), rng);
            w = (1.0 - (1.0 + b) * z) / (1.0 - (1.0 - b) * z);
            if (kappa * w + (p - 1.0) * std::log1p(-x0 * w) - c >= std::log(rng.uniform())) break;
        }
    }
    const double s = std::sqrt(std::max(0.0, 1.0 - w * w));
    return w * mu + s * orthogonal_unit(mu, rng);
}

Vec sample_vmf(const VmfParams& p, Rng& rng) {
    const Vec mu = (p.mean_direction - p.center) / p.radius;
    if (std::abs(mu.norm() - 1.0) > 1e-10) throw std::invalid_argument("sample_vmf: mean direction off the sphere");
    return p.center + p.radius * sample_vmf_unit(mu, p.kappa, rng);
}

double log_mean_exp_cosine(int p, double kappa) {
    if (kappa < 1e-8) return 0.0;
    const double nu = 0.5 * p - 1.0;
    return std::lgamma(0.5 * p) + nu * std::log(2.0 / kappa) + log_bessel_i(nu, kappa);
}

double vmf_log_density(const Vec& y, const Vec& mu, double kappa) {
    const auto p = static_cast<int>(mu.size());
    const double log_area = std::log(2.0) + 0.5 * p * std::log(M_PI) - std::lgamma(0.5 * p);
    return kappa * y.dot(mu) - log_area - log_mean_exp_cosine(p, kappa);
}

double sphere_log_acceptance_weight(const Vec& x, double T, const SphereConstraint& sphere) {
    const double rho = (x - sphere.center).norm();
    const double r = sphere.radius;
    const double kappa = r * rho / T;
    return -0.5 * (r * r + rho * rho) / T + log_mean_exp_cosine(static_cast<int>(x.size()), kappa);
}

SphereEndpoint sample_vmf_endpoint(const Vec& x, double T, const SphereConstraint& sphere, Rng& rng) {
    if (!(T > 0.0)) throw std::invalid_argument("sample_vmf_endpoint: T must be positive");
    const Vec diff = x - sphere.center;
    const double rho = diff.norm();
    if (rho < 1e-12 * sphere.radius) throw std::domain_error("sample_vmf_endpoint: x is at the centre");
    const double kappa = sphere.radius * rho / T;
    const Vec y = sphere.center + sphere.radius * sample_vmf_unit(diff / rho, kappa, rng);
    const double lw = std::min(0.0, sphere_log_acceptance_weight(x, T, sphere));
    return {y, std::exp(lw), lw};
}

}  // namespace cfusion
