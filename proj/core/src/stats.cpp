#include "cfusion/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cfusion {

double kolmogorov_tail(double lambda) {
    if (lambda <= 0.0) return 1.0;
    if (lambda < 0.3) {
        // Dual series; the alternating form converges too slowly here.
        const double c = std::sqrt(2.0 * M_PI) / lambda;
        double s = 0.0;
        for (int k = 1; k < 50; ++k) {
            const double t = (2.0 * k - 1.0) * M_PI / lambda;
            s += std::exp(-t * t / 8.0);
        }
        return std::clamp(1.0 - c * s, 0.0, 1.0);
    }
    double s = 0.0;
    for (int j = 1; j < 200; ++j) {
        const double t = std::exp(-2.0 * j * j * lambda * lambda);
        s += (j % 2 ? 2.0 : -2.0) * t;
        if (t < 1e-18) break;
    }
    return std::clamp(s, 0.0, 1.0);
}

namespace {
double stephens(double D, double n) {
    const double rn = std::sqrt(n);
    return kolmogorov_tail((rn + 0.12 + 0.11 / rn) * D);
}
}  // namespace

TestResult ks_one_sample(std::vector<double> x, const std::function<double(double)>& cdf) {
    if (x.empty()) throw std::invalid_argument("ks_one_sample: empty sample");
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double D = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double F = cdf(x[i]);
        D = std::max({D, (static_cast<double>(i) + 1.0) / n - F, F - static_cast<double>(i) / n});
    }
    return {D, stephens(D, n)};
}

TestResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double D = 0.0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == v) ++i;
        while (j < b.size() && b[j] == v) ++j;
        D = std::max(D, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return {D, stephens(D, na * nb / (na + nb))};
}

double chi_square_tail(double x, double dof) {
    if (x <= 0.0) return 1.0;
    return boost::math::cdf(boost::math::complement(boost::math::chi_squared(dof), x));
}

TestResult chi_square(std::span<const double> observed, std::span<const double> expected, int fitted) {
    if (observed.size() != expected.size() || observed.size() < 2) {
        throw std::invalid_argument("chi_square: need matching bins, at least two");
    }
    double x2 = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (!(expected[i] > 0.0)) throw std::invalid_argument("chi_square: expected counts must be positive");
        const double d = observed[i] - expected[i];
        x2 += d * d / expected[i];
    }
    const double dof = static_cast<double>(observed.size()) - 1.0 - fitted;
    return {x2, chi_square_tail(x2, dof)};
}

double mean(std::span<const double> x) {
    if (x.empty()) throw std::invalid_argument("mean: empty sample");
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
    if (x.size() < 2) throw std::invalid_argument("variance: need two values");
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(x.size() - 1);
}

namespace {
double autocov(std::span<const double> x, double m, std::size_t lag) {
    double s = 0.0;
    for (std::size_t i = 0; i + lag < x.size(); ++i) s += (x[i] - m) * (x[i + lag] - m);
    return s / static_cast<double>(x.size());
}
}  // namespace

double autocorrelation(std::span<const double> x, std::size_t lag) {
    const double m = mean(x);
    const double g0 = autocov(x, m, 0);
    return g0 > 0.0 ? autocov(x, m, lag) / g0 : 0.0;
}

double ess_univariate(std::span<const double> x) {
    if (x.size() < 100) throw std::invalid_argument("ess: chain must have at least 100 states");
    const double n = static_cast<double>(x.size());
    const double m = mean(x);
    const double g0 = autocov(x, m, 0);
    if (!(g0 > 1e-300)) return 1.0;
    double sum = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; 2 * k + 1 < x.size(); ++k) {
        double G = autocov(x, m, 2 * k) + autocov(x, m, 2 * k + 1);
        if (!(G > 0.0)) break;
        G = std::min(G, prev);  // initial monotone sequence
        prev = G;
        sum += G;
    }
    const double tau = std::max((-g0 + 2.0 * sum) / g0, 1.0 / n);
    return std::clamp(n / tau, 1.0, n * n);
}

double ess(const Mat& chain) {
    double total = 0.0;
    std::vector<double> col(static_cast<std::size_t>(chain.rows()));
    for (Eigen::Index j = 0; j < chain.cols(); ++j) {
        for (Eigen::Index i = 0; i < chain.rows(); ++i) col[static_cast<std::size_t>(i)] = chain(i, j);
        total += ess_univariate(col);
    }
    return total / static_cast<double>(chain.cols());
}

TabulatedCdf::TabulatedCdf(const std::function<double(double)>& log_density, double lo, double hi, int panels)
    : lo_(lo), hi_(hi), h_((hi - lo) / panels) {
    if (!(hi > lo) || panels < 1) throw std::invalid_argument("TabulatedCdf: bad range");
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    cdf_.assign(static_cast<std::size_t>(panels) + 1, 0.0);
    const auto f = [&](double x) { return std::exp(log_density(x)); };
    for (int i = 0; i < panels; ++i) {
        const double a = lo + i * h_;
        cdf_[static_cast<std::size_t>(i) + 1] = cdf_[static_cast<std::size_t>(i)] + GK::integrate(f, a, a + h_, 0);
    }
    z_ = cdf_.back();
    for (double& c : cdf_) c /= z_;
}

double TabulatedCdf::operator()(double x) const {
    if (x <= lo_) return 0.0;
    if (x >= hi_) return 1.0;
    const double u = (x - lo_) / h_;
    const auto i = static_cast<std::size_t>(u);
    const double w = u - static_cast<double>(i);
    if (i + 1 >= cdf_.size()) return 1.0;
    return (1.0 - w) * cdf_[i] + w * cdf_[i + 1];
}

}  // namespace cfusion
