#include "cfusion/chmc.hpp"

#include <cmath>
#include <stdexcept>

namespace cfusion {

namespace {

struct Phase {
    Vec q;
    Vec p;
    Vec grad;
};

Vec tangent_projection(const Mat& J, const Vec& v) {
    const Mat JJt = J * J.transpose();
    return v - J.transpose() * JJt.ldlt().solve(J * v);
}

// Position update along J(q)' followed by the momentum half step and
// re-projection onto the tangent space at the new point.
std::optional<Phase> rattle(const Phase& s, const Potential& U, const GeneralConstraint& g,
                            const ChmcConfig& cfg) {
    const double eps = cfg.step_size;
    const Vec pt = s.p - 0.5 * eps * s.grad;
    const Mat Jq = g.jacobian(s.q);
    Vec q = s.q + eps * pt;
    bool converged = false;
    for (int it = 0; it < cfg.newton_max_iter; ++it) {
        const Vec r = g.h(q);
        if (!r.allFinite()) return std::nullopt;
        const bool small = r.lpNorm<Eigen::Infinity>() <= cfg.newton_tol;
        const Mat M = g.jacobian(q) * Jq.transpose();
        Eigen::PartialPivLU<Mat> lu(M);
        q -= Jq.transpose() * lu.solve(r);
        // One polishing iteration past the tolerance.
        if (small) {
            converged = true;
            break;
        }
    }
    if (!converged || !g.satisfied(q)) return std::nullopt;
    Phase out;
    out.q = q;
    out.grad = U.gradient(q);
    const Vec ph = (q - s.q) / eps;
    out.p = tangent_projection(g.jacobian(q), ph - 0.5 * eps * out.grad);
    return out;
}

}  // namespace

Potential Potential::zero() {
    return {[](const Vec&) { return 0.0; }, [](const Vec& y) { return Vec::Zero(y.size()).eval(); }};
}

ChmcState chmc_init(const Vec& seed, const Potential& U, const GeneralConstraint& g, const ChmcConfig& cfg) {
    if (!(cfg.step_size > 0.0) || cfg.leapfrog_steps < 1) {
        throw std::invalid_argument("chmc: step size must be positive and L >= 1");
    }
    GeneralConstraint tight = g;
    tight.tolerance = std::min(g.tolerance, cfg.newton_tol);
    auto y = newton_project(tight, seed, cfg.newton_max_iter);
    if (!y) throw std::runtime_error("chmc: could not project the seed onto the constraint");
    ChmcState s;
    s.y = *y;
    s.U = U.value(s.y);
    return s;
}

bool chmc_step(ChmcState& state, const Potential& U, const GeneralConstraint& g, const ChmcConfig& cfg,
               Rng& rng) {
    ++state.diag.proposed;
    Vec xi(state.y.size());
    for (Eigen::Index i = 0; i < xi.size(); ++i) xi[i] = rng.normal();
    Phase cur{state.y, tangent_projection(g.jacobian(state.y), xi), U.gradient(state.y)};
    const double H0 = state.U + 0.5 * cur.p.squaredNorm();
    const double reverse_tol = 10.0 * cfg.newton_tol;

    for (int l = 0; l < cfg.leapfrog_steps; ++l) {
        auto next = rattle(cur, U, g, cfg);
        if (!next) {
            ++state.diag.projection_failures;
            return false;
        }
        Phase back_start{next->q, -next->p, next->grad};
        auto back = rattle(back_start, U, g, cfg);
        if (!back || (back->q - cur.q).lpNorm<Eigen::Infinity>() > reverse_tol) {
            ++state.diag.reverse_failures;
            return false;
        }
        cur = std::move(*next);
    }
    const double U1 = U.value(cur.q);
    const double H1 = U1 + 0.5 * cur.p.squaredNorm();
    if (std::isfinite(H1) && std::log(rng.uniform()) < H0 - H1) {
        state.y = cur.q;
        state.U = U1;
        ++state.diag.accepted;
        return true;
    }
    return false;
}

ChmcConfig tune_step_size(ChmcState& state, const Potential& U, const GeneralConstraint& g, ChmcConfig cfg,
                          Rng& rng, double lo, double hi, int probe) {
    double factor = 2.0;
    int last_dir = 0;
    for (int round = 0; round < 40; ++round) {
        std::size_t acc = 0;
        for (int i = 0; i < probe; ++i) acc += chmc_step(state, U, g, cfg, rng) ? 1 : 0;
        const double rate = static_cast<double>(acc) / probe;
        int dir = 0;
        if (rate < lo) dir = -1;
        if (rate > hi) dir = 1;
        if (dir == 0) break;
        if (last_dir != 0 && dir != last_dir) factor = std::sqrt(factor);
        if (factor < 1.01) break;
        cfg.step_size = dir > 0 ? cfg.step_size * factor : cfg.step_size / factor;
        last_dir = dir;
    }
    return cfg;
}

UniformManifoldStream::UniformManifoldStream(GeneralConstraint g, const Vec& seed, ChmcConfig cfg,
                                             std::size_t burn_in, std::size_t thin, Rng& rng)
    : g_(std::move(g)), cfg_(cfg), thin_(std::max<std::size_t>(thin, 1)) {
    const Potential zero = Potential::zero();
    state_ = chmc_init(seed, zero, g_, cfg_);
    for (std::size_t i = 0; i < burn_in; ++i) chmc_step(state_, zero, g_, cfg_, rng);
}

Vec UniformManifoldStream::next(Rng& rng) {
    const Potential zero = Potential::zero();
    for (std::size_t i = 0; i < thin_; ++i) chmc_step(state_, zero, g_, cfg_, rng);
    return state_.y;
}

std::vector<Vec> uniform_on_manifold(const GeneralConstraint& g, const Vec& seed, std::size_t n,
                                     std::size_t burn_in, std::size_t thin, Rng& rng, const ChmcConfig& cfg) {
    UniformManifoldStream stream(g, seed, cfg, burn_in, thin, rng);
    std::vector<Vec> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(stream.next(rng));
    return out;
}

}  // namespace cfusion
