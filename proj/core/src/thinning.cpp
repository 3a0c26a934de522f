#include "cfusion/thinning.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace cfusion {

namespace {
constexpr double kBoundSlack = 1e-9;
}

ThinningOutcome accept_bounded(const ComponentDensity& density, std::span<BridgeSkeleton> coords, double M,
                               Rng& rng) {
    if (coords.empty()) throw std::invalid_argument("accept_bounded: no coordinates");
    if (static_cast<int>(coords.size()) != density.dimension()) {
        throw std::invalid_argument("accept_bounded: coordinate count does not match dimension");
    }
    if (!(M >= 0.0) || !std::isfinite(M)) throw std::invalid_argument("accept_bounded: M must be finite, >= 0");
    ThinningOutcome out;
    const double T = coords.front().horizon();
    const std::uint64_t n = rng.poisson(T * M);
    Vec u(density.dimension());
    for (std::uint64_t k = 0; k < n; ++k) {
        const double t = T * rng.uniform();
        const double mark = M * rng.uniform();
        for (std::size_t j = 0; j < coords.size(); ++j) u[static_cast<Eigen::Index>(j)] = bridge_interpolate(coords[j], t, rng);
        out.bridge_points_revealed += coords.size();
        ++out.poisson_points_used;
        const double ph = density.phi(u);
        if (ph > M * (1.0 + kBoundSlack) + kBoundSlack) {
            throw BoundViolation("accept_bounded: phi exceeds the supplied bound");
        }
        if (mark < ph) {
            out.accepted = false;
            return out;
        }
    }
    return out;
}

ThinningOutcome accept_layered(const ComponentDensity& density, std::span<BridgeSkeleton> coords,
                               const LayerSequence& layers, Rng& rng) {
    const auto d = static_cast<Eigen::Index>(coords.size());
    Vec lo(d), hi(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        BridgeSkeleton& s = coords[static_cast<std::size_t>(j)];
        const int I = sample_layer(s.horizon(), s.start(), s.end(), layers, rng);
        sample_extremum_and_decompose(s, I, layers, rng);
        lo[j] = s.layer()->lower;
        hi[j] = s.layer()->upper;
    }
    return accept_bounded(density, coords, density.phi_interval_bound(lo, hi), rng);
}

ThinningOutcome accept_path(const ComponentDensity& density, const Vec& x, const Vec& y, double T,
                            const ThinningOptions& opts, Rng& rng) {
    std::vector<BridgeSkeleton> coords;
    coords.reserve(static_cast<std::size_t>(x.size()));
    for (Eigen::Index j = 0; j < x.size(); ++j) coords.emplace_back(T, x[j], y[j]);
    const std::optional<double> bound = density.phi_global_bound();
    if (bound && !opts.force_layered) return accept_bounded(density, coords, *bound, rng);
    return accept_layered(density, coords, LayerSequence::for_horizon(T, opts.layer_spacing), rng);
}

}  // namespace cfusion
