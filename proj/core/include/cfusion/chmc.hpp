#pragma once

#include <cstddef>
#include <functional>

#include "cfusion/constraints.hpp"

namespace cfusion {

struct ChmcConfig {
    double step_size = 0.1;
    int leapfrog_steps = 10;
    double newton_tol = 1e-9;
    int newton_max_iter = 50;
};

struct Potential {
    std::function<double(const Vec&)> value;
    std::function<Vec(const Vec&)> gradient;

    static Potential zero();
};

struct ChmcDiagnostics {
    std::size_t proposed = 0;
    std::size_t accepted = 0;
    std::size_t reverse_failures = 0;
    std::size_t projection_failures = 0;

    double acceptance_rate() const {
        return proposed ? static_cast<double>(accepted) / static_cast<double>(proposed) : 0.0;
    }
};

struct ChmcState {
    Vec y;
    double U = 0.0;
    ChmcDiagnostics diag;
};

// Starts a chain at the Newton projection of seed; throws when it fails.
ChmcState chmc_init(const Vec& seed, const Potential& U, const GeneralConstraint& g, const ChmcConfig& cfg);

// One RATTLE trajectory with momentum refresh, reverse check and
// Metropolis correction. Returns whether the proposal was accepted.
bool chmc_step(ChmcState& state, const Potential& U, const GeneralConstraint& g, const ChmcConfig& cfg,
               Rng& rng);

// Doubles or halves the step size until the acceptance rate over `probe`
// steps lies in [lo, hi]. The chain advances while tuning.
ChmcConfig tune_step_size(ChmcState& state, const Potential& U, const GeneralConstraint& g, ChmcConfig cfg,
                          Rng& rng, double lo = 0.7, double hi = 0.9, int probe = 200);

// Uniform law on {h = 0}, sampled by a zero-potential chain.
class UniformManifoldStream {
public:
    UniformManifoldStream(GeneralConstraint g, const Vec& seed, ChmcConfig cfg, std::size_t burn_in,
                          std::size_t thin, Rng& rng);

    Vec next(Rng& rng);
    const ChmcState& state() const { return state_; }

private:
    GeneralConstraint g_;
    ChmcConfig cfg_;
    std::size_t thin_;
    ChmcState state_;
};

std::vector<Vec> uniform_on_manifold(const GeneralConstraint& g, const Vec& seed, std::size_t n,
                                     std::size_t burn_in, std::size_t thin, Rng& rng,
                                     const ChmcConfig& cfg = {});

}  // namespace cfusion
