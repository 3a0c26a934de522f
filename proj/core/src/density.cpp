#include "cfusion/density.hpp"

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cfusion/special.hpp"

namespace cfusion {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log(1 + exp(x)) without overflow.
double softplus(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    double e = std::exp(x);
    return e / (1.0 + e);
}

}  // namespace

double ComponentDensity::phi(const Vec& u) const {
    Vec g = grad_log_density(u);
    return 0.5 * (g.squaredNorm() + div_grad(u)) - drift_floor_;
}

double phi(const ComponentDensity& density, const Vec& u) { return density.phi(u); }

Vec UnivariateDensity::grad_log_density(const Vec& u) const {
    Vec g(1);
    g[0] = d_log1(u[0]);
    return g;
}

Vec UnivariateDensity::sample(Rng& rng) const {
    Vec v(1);
    v[0] = sample1(rng);
    return v;
}

Vec UnivariateDensity::mean() const {
    Vec v(1);
    v[0] = mean1();
    return v;
}

Vec UnivariateDensity::variance() const {
    Vec v(1);
    v[0] = variance1();
    return v;
}

// ---------------------------------------------------------------- Gaussian

GaussianDensity::GaussianDensity(Vec mu, double sigma) : mu_(std::move(mu)), sigma_(sigma) {
    if (mu_.size() < 1) throw std::invalid_argument("GaussianDensity: empty mean");
    if (!(sigma > 0.0)) throw std::invalid_argument("GaussianDensity: sigma must be positive");
    drift_floor_ = -0.5 * static_cast<double>(mu_.size()) / (sigma_ * sigma_);
}

GaussianDensity::GaussianDensity(double mu, double sigma)
    : GaussianDensity(Vec::Constant(1, mu), sigma) {}

double GaussianDensity::log_density(const Vec& u) const {
    const double d = static_cast<double>(mu_.size());
    return -0.5 * (u - mu_).squaredNorm() / (sigma_ * sigma_) -
           d * (std::log(sigma_) + 0.5 * std::log(2.0 * M_PI));
}

Vec GaussianDensity::grad_log_density(const Vec& u) const {
    return -(u - mu_) / (sigma_ * sigma_);
}

double GaussianDensity::div_grad(const Vec&) const {
    return -static_cast<double>(mu_.size()) / (sigma_ * sigma_);
}

double GaussianDensity::phi(const Vec& u) const {
    const double s2 = sigma_ * sigma_;
    return 0.5 * (u - mu_).squaredNorm() / (s2 * s2);
}

double GaussianDensity::phi_interval_bound(const Vec& lo, const Vec& hi) const {
    const double s2 = sigma_ * sigma_;
    double acc = 0.0;
    for (Eigen::Index j = 0; j < mu_.size(); ++j) {
        double a = std::abs(lo[j] - mu_[j]);
        double b = std::abs(hi[j] - mu_[j]);
        double m = std::max(a, b);
        acc += m * m;
    }
    return 0.5 * acc / (s2 * s2);
}

Vec GaussianDensity::sample(Rng& rng) const {
    Vec v(mu_.size());
    for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = mu_[j] + sigma_ * rng.normal();
    return v;
}

Vec GaussianDensity::variance() const { return Vec::Constant(mu_.size(), sigma_ * sigma_); }

double GaussianDensity::quantile1(double p) const {
    boost::math::normal_distribution<double> n(mu_[0], sigma_);
    return boost::math::quantile(n, p);
}

std::string GaussianDensity::describe() const {
    std::ostringstream os;
    os << "gaussian(d=" << mu_.size() << ", sigma=" << sigma_ << ")";
    return os.str();
}

NormalDensity::NormalDensity(double mu, double sigma) : g_(mu, sigma) { drift_floor_ = g_.drift_floor(); }

double NormalDensity::log_density1(double x) const { return g_.log_density(Vec::Constant(1, x)); }

double NormalDensity::d_log1(double x) const {
    return -(x - g_.mu()[0]) / (g_.sigma() * g_.sigma());
}

double NormalDensity::d2_log1(double) const { return -1.0 / (g_.sigma() * g_.sigma()); }

double NormalDensity::phi1(double x) const { return g_.phi(Vec::Constant(1, x)); }

double NormalDensity::phi_bound1(double lo, double hi) const {
    return g_.phi_interval_bound(Vec::Constant(1, lo), Vec::Constant(1, hi));
}

double NormalDensity::sample1(Rng& rng) const { return g_.mu()[0] + g_.sigma() * rng.normal(); }

// ---------------------------------------------------------------- Student-T

StudentTDensity::StudentTDensity(StudentTParams p) : p_(p) {
    if (!(p.sigma > 0.0)) throw std::invalid_argument("StudentTDensity: sigma must be positive");
    if (!(p.nu > 0.0)) throw std::invalid_argument("StudentTDensity: nu must be positive");
    const double nu = p.nu;
    log_norm_ = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                0.5 * std::log(nu * M_PI) - std::log(p.sigma);
    drift_floor_ = -(nu + 1.0) / (2.0 * nu * p.sigma * p.sigma);
    w_peak_ = nu * (nu + 4.0) / (nu + 2.0);
}

double StudentTDensity::log_density1(double x) const {
    const double z = (x - p_.mu) / p_.sigma;
    return log_norm_ - 0.5 * (p_.nu + 1.0) * std::log1p(z * z / p_.nu);
}

double StudentTDensity::d_log1(double x) const {
    const double z = (x - p_.mu) / p_.sigma;
    return -(p_.nu + 1.0) * z / (p_.sigma * (p_.nu + z * z));
}

double StudentTDensity::d2_log1(double x) const {
    const double z = (x - p_.mu) / p_.sigma;
    const double w = z * z;
    const double den = p_.nu + w;
    return -(p_.nu + 1.0) * (p_.nu - w) / (p_.sigma * p_.sigma * den * den);
}

double StudentTDensity::phi_of_w(double w) const {
    // Closed form of the bracket minus its value at w = 0.
    const double nu = p_.nu;
    const double den = nu + w;
    return (nu + 1.0) * w * (w + nu * (nu + 4.0)) / (2.0 * p_.sigma * p_.sigma * nu * den * den);
}

double StudentTDensity::phi1(double x) const {
    const double z = (x - p_.mu) / p_.sigma;
    return phi_of_w(z * z);
}

double StudentTDensity::phi_bound1(double lo, double hi) const {
    const double zl = (lo - p_.mu) / p_.sigma;
    const double zh = (hi - p_.mu) / p_.sigma;
    double wmin = (zl <= 0.0 && zh >= 0.0) ? 0.0 : std::min(zl * zl, zh * zh);
    double wmax = std::max(zl * zl, zh * zh);
    double w = std::clamp(w_peak_, wmin, wmax);
    if (std::isinf(w)) return 0.0;
    return phi_of_w(w);
}

std::optional<double> StudentTDensity::phi_global_bound() const { return phi_of_w(w_peak_); }

double StudentTDensity::sample1(Rng& rng) const { return p_.mu + p_.sigma * rng.student_t(p_.nu); }

double StudentTDensity::quantile(double p) const {
    boost::math::students_t_distribution<double> t(p_.nu);
    return p_.mu + p_.sigma * boost::math::quantile(t, p);
}

double StudentTDensity::mean1() const {
    if (p_.nu <= 1.0) throw std::domain_error("StudentTDensity: mean requires nu > 1");
    return p_.mu;
}

double StudentTDensity::variance1() const {
    if (p_.nu <= 2.0) throw std::domain_error("StudentTDensity: variance requires nu > 2");
    return p_.sigma * p_.sigma * p_.nu / (p_.nu - 2.0);
}

std::string StudentTDensity::describe() const {
    std::ostringstream os;
    os << "student_t(mu=" << p_.mu << ", sigma=" << p_.sigma << ", nu=" << p_.nu << ")";
    return os.str();
}

// ---------------------------------------------------------------- GenLog

GenLogDensity::GenLogDensity(GenLogParams p) : p_(p) {
    if (!(p.alpha > 0.0) || !(p.beta > 0.0) || !(p.gamma > 0.0)) {
        throw std::invalid_argument("GenLogDensity: alpha, beta, gamma must be positive");
    }
    log_norm_ = std::lgamma(p.alpha + p.beta) - std::lgamma(p.alpha) - std::lgamma(p.beta) -
                std::log(p.gamma);
    const double s_star = (2.0 * p.alpha + 1.0) / (2.0 * (p.alpha + p.beta + 1.0));
    q_min_ = q_of_s(s_star);
    drift_floor_ = q_min_ / (2.0 * p.gamma * p.gamma);
}

double GenLogDensity::q_of_s(double s) const {
    const double ab = p_.alpha + p_.beta;
    const double lin = p_.alpha - ab * s;
    return lin * lin - ab * s * (1.0 - s);
}

double GenLogDensity::log_density1(double x) const {
    const double z = (x - p_.C) / p_.gamma;
    return log_norm_ - p_.alpha * softplus(-z) - p_.beta * softplus(z);
}

double GenLogDensity::d_log1(double x) const {
    const double s = sigmoid((x - p_.C) / p_.gamma);
    return (p_.alpha - (p_.alpha + p_.beta) * s) / p_.gamma;
}

double GenLogDensity::d2_log1(double x) const {
    const double s = sigmoid((x - p_.C) / p_.gamma);
    return -(p_.alpha + p_.beta) * s * (1.0 - s) / (p_.gamma * p_.gamma);
}

double GenLogDensity::raw_phi1(double x) const {
    return q_of_s(sigmoid((x - p_.C) / p_.gamma)) / (2.0 * p_.gamma * p_.gamma);
}

double GenLogDensity::phi1(double x) const {
    const double v = q_of_s(sigmoid((x - p_.C) / p_.gamma)) - q_min_;
    return std::max(0.0, v) / (2.0 * p_.gamma * p_.gamma);
}

double GenLogDensity::phi_bound1(double lo, double hi) const {
    // The bracket is a convex quadratic in the logistic coordinate s, so the
    // maximum over an interval sits at one of its ends.
    const double sl = lo == -kInf ? 0.0 : sigmoid((lo - p_.C) / p_.gamma);
    const double sh = hi == kInf ? 1.0 : sigmoid((hi - p_.C) / p_.gamma);
    const double q = std::max(q_of_s(sl), q_of_s(sh));
    return (q - q_min_) / (2.0 * p_.gamma * p_.gamma);
}

std::optional<double> GenLogDensity::phi_global_bound() const {
    const double q = std::max(p_.alpha * p_.alpha, p_.beta * p_.beta);
    return (q - q_min_) / (2.0 * p_.gamma * p_.gamma);
}

double GenLogDensity::sample1(Rng& rng) const {
    return p_.gamma * (rng.log_gamma_variate(p_.alpha) - rng.log_gamma_variate(p_.beta)) + p_.C;
}

double GenLogDensity::quantile(double prob) const {
    // G_a / (G_a + G_b) is Beta(a, b), so X = C + gamma * logit(B).
    if (prob > 0.5) {
        // Upper tail through the mirrored Beta keeps 1 - B representable.
        boost::math::beta_distribution<double> b(p_.beta, p_.alpha);
        const double v = boost::math::quantile(b, 1.0 - prob);
        return p_.C + p_.gamma * (std::log1p(-v) - std::log(v));
    }
    boost::math::beta_distribution<double> b(p_.alpha, p_.beta);
    const double u = boost::math::quantile(b, prob);
    return p_.C + p_.gamma * (std::log(u) - std::log1p(-u));
}

double GenLogDensity::mean1() const { return genlog_cumulants(p_)[0]; }

double GenLogDensity::variance1() const { return genlog_cumulants(p_)[1]; }

std::string GenLogDensity::describe() const {
    std::ostringstream os;
    os << "genlog(alpha=" << p_.alpha << ", beta=" << p_.beta << ", gamma=" << p_.gamma
       << ", C=" << p_.C << ")";
    return os.str();
}

std::array<double, 4> genlog_cumulants(const GenLogParams& p) {
    if (!(p.alpha > 0.0) || !(p.beta > 0.0) || !(p.gamma > 0.0)) {
        throw std::invalid_argument("genlog_cumulants: alpha, beta, gamma must be positive");
    }
    const double g = p.gamma;
    // log G_a has cumulants polygamma(n - 1, a); -log G_b contributes with sign (-1)^n.
    return {p.C + g * (digamma(p.alpha) - digamma(p.beta)),
            g * g * (trigamma(p.alpha) + trigamma(p.beta)),
            g * g * g * (polygamma(2, p.alpha) - polygamma(2, p.beta)),
            g * g * g * g * (polygamma(3, p.alpha) + polygamma(3, p.beta))};
}

std::array<double, 4> sample_cumulants(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    if (x.size() < 4) throw std::invalid_argument("sample_cumulants: need at least 4 values");
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    const double k2 = n / (n - 1.0) * m2;
    const double k3 = n * n / ((n - 1.0) * (n - 2.0)) * m3;
    const double k4 = n * n * ((n + 1.0) * m4 - 3.0 * (n - 1.0) * m2 * m2) /
                      ((n - 1.0) * (n - 2.0) * (n - 3.0));
    return {mean, k2, k3, k4};
}

}  // namespace cfusion
