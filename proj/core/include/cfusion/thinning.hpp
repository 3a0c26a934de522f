#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

#include "cfusion/bridge.hpp"
#include "cfusion/density.hpp"

namespace cfusion {

struct ThinningOutcome {
    bool accepted = true;
    std::size_t poisson_points_used = 0;
    std::size_t bridge_points_revealed = 0;
};

class BoundViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts with probability exp(-int_0^T phi(omega_t) dt), where omega is the
// d-dimensional path whose coordinates are the given skeletons. M must
// dominate phi wherever the path can go.
ThinningOutcome accept_bounded(const ComponentDensity& density, std::span<BridgeSkeleton> coords, double M,
                               Rng& rng);

// Same event when phi has no global bound: each coordinate is first
// confined to a layer, and M is taken from the resulting box.
ThinningOutcome accept_layered(const ComponentDensity& density, std::span<BridgeSkeleton> coords,
                               const LayerSequence& layers, Rng& rng);

struct ThinningOptions {
    double layer_spacing = 1.0;  // c in a_i = i c sqrt(T)
    bool force_layered = false;
};

// Bridge from x to y over [0, T]: bounded thinning when a global bound
// exists, layered otherwise.
ThinningOutcome accept_path(const ComponentDensity& density, const Vec& x, const Vec& y, double T,
                            const ThinningOptions& opts, Rng& rng);

}  // namespace cfusion
