#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cfusion/density.hpp"
#include "cfusion/special.hpp"

namespace cfusion {

namespace {

struct FitTarget {
    double k2, k3, k4;
    double lambda1, lambda2;
    double log_min_shape;
};

double objective(const gsl_vector* v, void* params) {
    const auto* t = static_cast<const FitTarget*>(params);
    const double la = gsl_vector_get(v, 0);
    const double lb = gsl_vector_get(v, 1);
    const double lg = gsl_vector_get(v, 2);
    if (la > 12.0 || lb > 12.0 || std::abs(lg) > 12.0 || la < t->log_min_shape || lb < t->log_min_shape) {
        return std::numeric_limits<double>::max();
    }
    const double a = std::exp(la), b = std::exp(lb), g = std::exp(lg);
    const auto k = genlog_cumulants({a, b, g, 0.0});
    const double r2 = k[1] - t->k2;
    const double r3 = k[2] - t->k3;
    const double r4 = k[3] - t->k4;
    const double val = r2 * r2 + r3 * r3 + r4 * r4 + t->lambda1 * (a * a + b * b) + t->lambda2 * g * g;
    return std::isfinite(val) ? val : std::numeric_limits<double>::max();
}

struct MinResult {
    double f;
    double x[3];
};

MinResult nelder_mead(FitTarget& target, const double start[3], int max_iter) {
    gsl_multimin_function fn{&objective, 3, &target};
    gsl_vector* x = gsl_vector_alloc(3);
    gsl_vector* step = gsl_vector_alloc(3);
    for (int i = 0; i < 3; ++i) {
        gsl_vector_set(x, i, start[i]);
        gsl_vector_set(step, i, 0.3);
    }
    gsl_multimin_fminimizer* s =
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 3);
    gsl_multimin_fminimizer_set(s, &fn, x, step);
    for (int it = 0; it < max_iter; ++it) {
        if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-10) == GSL_SUCCESS) break;
    }
    MinResult r{s->fval, {gsl_vector_get(s->x, 0), gsl_vector_get(s->x, 1), gsl_vector_get(s->x, 2)}};
    gsl_multimin_fminimizer_free(s);
    gsl_vector_free(x);
    gsl_vector_free(step);
    return r;
}

}  // namespace

GenLogParams fit_genlog(std::span<const double> residuals, const GenLogFitOptions& opts) {
    if (residuals.size() < 8) throw std::invalid_argument("fit_genlog: need at least 8 residuals");
    if (opts.lambda1 < 0.0 || opts.lambda2 < 0.0) {
        throw std::invalid_argument("fit_genlog: penalties must be non-negative");
    }
    if (!(opts.min_shape >= 0.0)) throw std::invalid_argument("fit_genlog: min_shape must be non-negative");
    const auto k = sample_cumulants(residuals);
    if (!(k[1] > 0.0)) throw std::invalid_argument("fit_genlog: residuals have zero variance");
    FitTarget target{k[1], k[2], std::max(0.0, k[3]), opts.lambda1, opts.lambda2,
                     opts.min_shape > 0.0 ? std::log(opts.min_shape) : -12.0};

    gsl_error_handler_t* old = gsl_set_error_handler_off();
    MinResult best{std::numeric_limits<double>::max(), {0, 0, 0}};
    const double shapes[] = {0.3, 1.0, 3.0, 10.0};
    for (double a0 : shapes) {
        for (double b0 : shapes) {
            const double a = std::max(a0, 1.5 * opts.min_shape), b = std::max(b0, 1.5 * opts.min_shape);
            const double g = std::sqrt(target.k2 / (trigamma(a) + trigamma(b)));
            const double start[3] = {std::log(a), std::log(b), std::log(g)};
            MinResult r = nelder_mead(target, start, opts.max_iter / 4);
            if (r.f < best.f) best = r;
        }
    }
    // Polish from the best start; the simplex can stall on long valleys.
    for (int round = 0; round < 3; ++round) {
        MinResult r = nelder_mead(target, best.x, opts.max_iter);
        if (r.f < best.f) best = r;
    }
    gsl_set_error_handler(old);

    if (!(best.f < std::numeric_limits<double>::max()) || !std::isfinite(best.f)) {
        throw std::runtime_error("fit_genlog: optimizer found no feasible solution");
    }
    GenLogParams p{std::exp(best.x[0]), std::exp(best.x[1]), std::exp(best.x[2]), 0.0};
    p.C = -p.gamma * (digamma(p.alpha) - digamma(p.beta));
    return p;
}

}  // namespace cfusion
