#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "cfusion/chmc.hpp"
#include "cfusion/constraints.hpp"
#include "cfusion/density.hpp"
#include "cfusion/thinning.hpp"

namespace cfusion {

struct FusionProblem {
    std::vector<DensityPtr> components;
    Constraint constraint;
    double T = 1.0;

    int dimension() const;  // d of each component
    void validate() const;
};

struct FusionOptions {
    std::size_t max_attempts = 1000000;
    ThinningOptions thinning;
    // Uniform stream for general constraints without an exact sampler.
    ChmcConfig chmc;
    std::size_t burn_in = 10000;
    std::size_t thin = 10;
    Vec manifold_seed;
};

struct FusionDraw {
    Vec y;
    std::size_t attempts_stage1 = 0;  // endpoint proposals
    std::size_t attempts_stage2 = 0;  // proposals that reached the bridge stage
    double wall_time = 0.0;           // seconds
};

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(std::size_t stage1, std::size_t stage2);
    std::size_t attempts_stage1, attempts_stage2;
};

struct AttemptStats {
    std::size_t attempts = 0;
    std::size_t stage1_passed = 0;
    std::size_t accepted = 0;
};

class FusionSampler {
public:
    FusionSampler(FusionProblem problem, FusionOptions options = {});

    const FusionProblem& problem() const { return problem_; }
    FusionDraw draw(Rng& rng) const;
    // Draw i uses Rng::substream(seed, i); output does not depend on threads.
    std::vector<FusionDraw> draw_batch(std::size_t n, std::uint64_t seed, unsigned threads = 1) const;
    // Runs a fixed number of proposals and counts how far each gets.
    AttemptStats probe(std::size_t attempts, Rng& rng) const;

private:
    struct Workspace;
    enum class Outcome { stage1_rejected, stage2_rejected, accepted };
    Outcome attempt(Workspace& ws, Rng& rng, Vec& y) const;
    Vec draw_components(Rng& rng) const;
    bool thin_all(const Vec& x, const Vec& y, Rng& rng) const;

    FusionProblem problem_;
    FusionOptions opts_;
    int d_;
    std::shared_ptr<const GaussianLinearSampler> linear_;
};

FusionDraw sample_case1(const FusionProblem& problem, Rng& rng, const FusionOptions& options = {});
FusionDraw sample_case2(const FusionProblem& problem, Rng& rng, const FusionOptions& options = {});

struct PilotResult {
    double T;
    std::vector<double> grid;
    std::vector<AttemptStats> stats;
};

// Picks T from T0 * 2^k, k in [k_min, k_max], by the fraction of fully
// accepted proposals, preferring candidates whose stage-one rate is >= 0.1.
PilotResult pilot_T(FusionProblem problem, const FusionOptions& options, std::uint64_t seed,
                    double T0 = 1.0, int k_min = -6, int k_max = 3, std::size_t attempts = 20000);

// Runs body(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace cfusion
