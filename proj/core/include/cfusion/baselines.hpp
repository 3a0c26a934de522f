#pragma once

#include <array>
#include <string>
#include <vector>

#include "cfusion/chmc.hpp"
#include "cfusion/fusion.hpp"
#include "cfusion/quadrature.hpp"

namespace cfusion {

// Three components under a single sum constraint, with reference moments.
struct BenchmarkScenario {
    std::string name;
    std::vector<UnivariatePtr> components;
    double s = 0.0;
    SumMoments truth;
};

// "genlog", "student" or "gaussian"; truth from quadrature.
BenchmarkScenario make_scenario(const std::string& name);

struct MomentEstimate {
    std::array<double, 3> mean{};
    std::array<double, 3> variance{};
};

MomentEstimate sample_moments(const Mat& points);
MomentEstimate weighted_moments(const Mat& points, const Vec& weights);

struct PercentageErrors {
    std::array<double, 3> mean{};
    std::array<double, 3> variance{};
    double total_mean = 0.0;
    double total_variance = 0.0;
};

// 100 |estimate - truth| / |truth| per component and summed.
PercentageErrors percentage_errors(const MomentEstimate& est, const SumMoments& truth);

struct ImportanceResult {
    Mat points;   // N x 3
    Vec weights;  // self-normalised
    double ess = 0.0;
    bool degenerate = false;  // ess / N < 1e-3
    MomentEstimate estimate;
};

// Proposal: moment-matched Gaussians (variances times `inflation`)
// conditioned on the sum.
ImportanceResult importance_sampler(const BenchmarkScenario& sc, std::size_t N, Rng& rng, double inflation = 1.0);
// Inflation from 2^k, k in [-8, 3], with the largest ESS on a pilot run.
double tune_importance_inflation(const BenchmarkScenario& sc, Rng& rng, std::size_t pilot = 20000);

struct ChainResult {
    Mat chain;  // N x 3, post burn-in
    double acceptance = 0.0;
    MomentEstimate estimate;
};

// Random walk on the constraint plane with increments z - mean(z).
ChainResult rw_mh_hyperplane(const BenchmarkScenario& sc, std::size_t N, double step, Rng& rng,
                             std::size_t burn_in = 10000);
double tune_rw_step(const BenchmarkScenario& sc, Rng& rng, double target = 0.42);

// CHMC with potential -sum log f_i on the plane.
ChainResult chmc_baseline(const BenchmarkScenario& sc, std::size_t N, Rng& rng, std::size_t burn_in = 10000,
                          ChmcConfig cfg = {});

MomentEstimate fusion_moments(const std::vector<FusionDraw>& draws);
Mat draws_matrix(const std::vector<FusionDraw>& draws);

}  // namespace cfusion
