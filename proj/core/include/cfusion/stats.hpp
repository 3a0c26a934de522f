#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cfusion/density.hpp"

namespace cfusion {

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

// Limiting Kolmogorov tail P(K > lambda).
double kolmogorov_tail(double lambda);

TestResult ks_one_sample(std::vector<double> x, const std::function<double(double)>& cdf);
TestResult ks_two_sample(std::vector<double> a, std::vector<double> b);
// Pearson chi-square against expected counts; dof = bins - 1 - fitted.
TestResult chi_square(std::span<const double> observed, std::span<const double> expected, int fitted = 0);
double chi_square_tail(double x, double dof);

double mean(std::span<const double> x);
double variance(std::span<const double> x);  // unbiased

// Initial positive sequence estimate of the effective sample size.
double ess_univariate(std::span<const double> x);
// Average over the columns of a (length x dim) chain.
double ess(const Mat& chain);

// Lag-k sample autocorrelation.
double autocorrelation(std::span<const double> x, std::size_t lag);

// CDF of a univariate density known up to a constant, tabulated by
// quadrature on [lo, hi] and interpolated linearly.
class TabulatedCdf {
public:
    TabulatedCdf(const std::function<double(double)>& log_density, double lo, double hi, int panels = 4000);
    double operator()(double x) const;
    double normaliser() const { return z_; }

private:
    double lo_, hi_, h_;
    std::vector<double> cdf_;
    double z_;
};

}  // namespace cfusion
