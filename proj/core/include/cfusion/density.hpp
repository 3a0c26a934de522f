#pragma once

#include <Eigen/Dense>

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfusion/rng.hpp"

namespace cfusion {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// One factor f_i of the product target. The killing rate is
//   phi(u) = 0.5 * (|grad log f(u)|^2 + laplacian log f(u)) - l
// with l the infimum of the bracket, so phi >= 0 everywhere.
class ComponentDensity {
public:
    virtual ~ComponentDensity() = default;

    virtual int dimension() const = 0;
    virtual double log_density(const Vec& u) const = 0;
    virtual Vec grad_log_density(const Vec& u) const = 0;
    virtual double div_grad(const Vec& u) const = 0;
    virtual double phi(const Vec& u) const;

    double drift_floor() const { return drift_floor_; }

    // Upper bound of phi over the whole space, if one exists.
    virtual std::optional<double> phi_global_bound() const = 0;
    // Upper bound of phi over the box [lo, hi] (entries may be infinite).
    virtual double phi_interval_bound(const Vec& lo, const Vec& hi) const = 0;

    virtual Vec sample(Rng& rng) const = 0;
    // Throws std::domain_error when the moment does not exist.
    virtual Vec mean() const = 0;
    virtual Vec variance() const = 0;

    virtual std::string describe() const = 0;

protected:
    double drift_floor_ = 0.0;
};

using DensityPtr = std::shared_ptr<const ComponentDensity>;

double phi(const ComponentDensity& density, const Vec& u);

// Scalar densities share a thin adapter onto the vector interface.
class UnivariateDensity : public ComponentDensity {
public:
    int dimension() const final { return 1; }
    double log_density(const Vec& u) const final { return log_density1(u[0]); }
    Vec grad_log_density(const Vec& u) const final;
    double div_grad(const Vec& u) const final { return d2_log1(u[0]); }
    double phi(const Vec& u) const final { return phi1(u[0]); }
    double phi_interval_bound(const Vec& lo, const Vec& hi) const final {
        return phi_bound1(lo[0], hi[0]);
    }
    Vec sample(Rng& rng) const final;
    Vec mean() const final;
    Vec variance() const final;

    virtual double log_density1(double x) const = 0;
    virtual double d_log1(double x) const = 0;
    virtual double d2_log1(double x) const = 0;
    virtual double phi1(double x) const = 0;
    virtual double phi_bound1(double lo, double hi) const = 0;
    virtual double sample1(Rng& rng) const = 0;
    virtual double quantile(double p) const = 0;
    virtual double mean1() const = 0;
    virtual double variance1() const = 0;
};

// Isotropic Gaussian N(mu, sigma^2 I) in dimension mu.size().
class GaussianDensity final : public ComponentDensity {
public:
    GaussianDensity(Vec mu, double sigma);
    GaussianDensity(double mu, double sigma);

    int dimension() const override { return static_cast<int>(mu_.size()); }
    double log_density(const Vec& u) const override;
    Vec grad_log_density(const Vec& u) const override;
    double div_grad(const Vec& u) const override;
    double phi(const Vec& u) const override;
    std::optional<double> phi_global_bound() const override { return std::nullopt; }
    double phi_interval_bound(const Vec& lo, const Vec& hi) const override;
    Vec sample(Rng& rng) const override;
    Vec mean() const override { return mu_; }
    Vec variance() const override;
    std::string describe() const override;

    const Vec& mu() const { return mu_; }
    double sigma() const { return sigma_; }
    double quantile1(double p) const;

private:
    Vec mu_;
    double sigma_;
};

// Scalar N(mu, sigma^2) on the univariate interface, for scenarios that
// need quantiles and scalar derivatives.
class NormalDensity final : public UnivariateDensity {
public:
    NormalDensity(double mu, double sigma);

    double log_density1(double x) const override;
    double d_log1(double x) const override;
    double d2_log1(double x) const override;
    double phi1(double x) const override;
    double phi_bound1(double lo, double hi) const override;
    std::optional<double> phi_global_bound() const override { return std::nullopt; }
    double sample1(Rng& rng) const override;
    double quantile(double p) const override { return g_.quantile1(p); }
    double mean1() const override { return g_.mu()[0]; }
    double variance1() const override { return g_.sigma() * g_.sigma(); }
    std::string describe() const override { return g_.describe(); }

private:
    GaussianDensity g_;
};

// Location-scale Student-T:
//   f(x) proportional to (1 + (x - mu)^2 / (nu sigma^2))^(-(nu + 1) / 2).
// sigma = 1 gives the shifted T_nu(mu).
struct StudentTParams {
    double mu = 0.0;
    double sigma = 1.0;
    double nu = 1.0;
};

class StudentTDensity final : public UnivariateDensity {
public:
    explicit StudentTDensity(StudentTParams p);

    double log_density1(double x) const override;
    double d_log1(double x) const override;
    double d2_log1(double x) const override;
    double phi1(double x) const override;
    double phi_bound1(double lo, double hi) const override;
    std::optional<double> phi_global_bound() const override;
    double sample1(Rng& rng) const override;
    double quantile(double p) const override;
    double mean1() const override;
    double variance1() const override;
    std::string describe() const override;

    const StudentTParams& params() const { return p_; }

private:
    double phi_of_w(double w) const;

    StudentTParams p_;
    double log_norm_;
    double w_peak_;
};

struct GenLogParams {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
    double C = 0.0;
};

// Generalized logistic law of gamma * log(G_alpha / G_beta) + C.
class GenLogDensity final : public UnivariateDensity {
public:
    explicit GenLogDensity(GenLogParams p);

    double log_density1(double x) const override;
    double d_log1(double x) const override;
    double d2_log1(double x) const override;
    double phi1(double x) const override;
    double phi_bound1(double lo, double hi) const override;
    std::optional<double> phi_global_bound() const override;
    double sample1(Rng& rng) const override;
    double quantile(double p) const override;
    double mean1() const override;
    double variance1() const override;
    std::string describe() const override;

    const GenLogParams& params() const { return p_; }

    // 0.5 * (f'^2 / f^2 + (log f)''), before subtracting the drift floor.
    double raw_phi1(double x) const;

private:
    double q_of_s(double s) const;

    GenLogParams p_;
    double log_norm_;
    double q_min_;
};

std::array<double, 4> genlog_cumulants(const GenLogParams& p);

struct GenLogFitOptions {
    double lambda1 = 1e-3;
    double lambda2 = 1e-6;
    int max_iter = 4000;
    // Floor on alpha and beta; the unconstrained optimum can drift to the
    // kinked Laplace limit.
    double min_shape = 0.2;
};

// Cumulant matching of (k2, k3, k4) with an L2 penalty; C is then set so
// the fitted law has mean zero.
GenLogParams fit_genlog(std::span<const double> residuals, const GenLogFitOptions& opts = {});

// Unbiased cumulant estimates (k-statistics) k1..k4.
std::array<double, 4> sample_cumulants(std::span<const double> x);

}  // namespace cfusion
