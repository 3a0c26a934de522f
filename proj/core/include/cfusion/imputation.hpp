#pragma once

#include <cstdint>
#include <vector>

#include "cfusion/fusion.hpp"

namespace cfusion {

// Y_t^(i) ~ GenLog(alpha_i, beta_i, gamma_i, C_i + mu_t^(i)),
// mu_t^(i) = b_i + sum_r Phi_r^(i) Y_{t-r}^(i) + Xi_t' psi^(i).
struct ArGenLogModel {
    int K = 0;
    std::vector<double> intercept;
    std::vector<Vec> phi;  // K each
    std::vector<Vec> psi;  // p each
    std::vector<GenLogParams> error;

    int series() const { return static_cast<int>(phi.size()); }
    int covariates() const { return psi.empty() ? 0 : static_cast<int>(psi.front().size()); }
    // mu_t for series i given the last K values (most recent last) and Xi_t.
    double location(int i, const Mat& recent, const Vec& xi) const;
};

class SingularDesign : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Series are the columns of Y (length n); Xi is n x p (p may be 0).
ArGenLogModel fit_ar_genlog(int K, const Mat& Y, const Mat& Xi, const GenLogFitOptions& opts = {});

struct SyntheticConfig {
    int m = 3;
    int K = 7;
    int p = 2;
    int n = 600;
    double spectral_radius = 0.6;
    double level = 5.0;
    std::vector<GenLogParams> error = {{3.0, 0.4, 0.5, 0.0}, {3.0, 1.2, 0.6, 0.0}, {2.0, 2.0, 0.8, 0.0}};
};

struct SyntheticData {
    ArGenLogModel model;
    Mat Y;   // n x m
    Mat Xi;  // n x p
};

// Simulates a stable model (sum_r |Phi_r| = spectral_radius) and a path of
// length n after a burn-in of 200 steps.
SyntheticData generate_synthetic(const SyntheticConfig& cfg, Rng& rng);

enum class SpreadCentre { total, mean };

struct ImputationTask {
    Mat history;  // K x m, most recent last
    Vec S;        // horizon
    Vec Sigma;    // optional spread constraint, empty when unused
    Mat Xi;       // horizon x p
    int N = 1000;
    SpreadCentre centre = SpreadCentre::total;
};

struct ImputeOptions {
    double tau = 1.0;  // T = tau * mean error variance
    FusionOptions fusion;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct StepSummary {
    Vec mean, var, q025, q975;
};

struct ImputationResult {
    std::vector<StepSummary> steps;
    std::vector<Mat> draws;  // per step, N x m
    std::vector<std::size_t> attempts;  // stage-one proposals per step, summed over paths
};

// Sequential constrained imputation along N self-consistent paths.
ImputationResult impute(const ArGenLogModel& model, const ImputationTask& task, const ImputeOptions& opts);
// The same paths with the constraint dropped.
ImputationResult impute_unconstrained(const ArGenLogModel& model, const ImputationTask& task,
                                      const ImputeOptions& opts);

// {sum y = S, sum (y_i - c)^2 = Sigma} with c = S or S / m.
GeneralConstraint spread_constraint(int m, double S, double Sigma, SpreadCentre centre);

StepSummary summarise(const Mat& draws);
double empirical_quantile(std::vector<double> v, double p);

}  // namespace cfusion
