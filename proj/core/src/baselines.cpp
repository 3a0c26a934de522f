#include "cfusion/baselines.hpp"

#include <cmath>
#include <stdexcept>

#include "cfusion/scenarios.hpp"

namespace cfusion {

namespace {

Vec start_point(const BenchmarkScenario& sc) {
    Vec y(3);
    for (int i = 0; i < 3; ++i) y[i] = sc.components[static_cast<std::size_t>(i)]->mean1();
    y.array() += (sc.s - y.sum()) / 3.0;
    return y;
}

double log_target(const BenchmarkScenario& sc, const Vec& y) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) s += sc.components[static_cast<std::size_t>(i)]->log_density1(y[i]);
    return s;
}

}  // namespace

BenchmarkScenario make_scenario(const std::string& name) {
    BenchmarkScenario sc;
    sc.name = name;
    sc.s = kScenarioSum;
    if (name == "genlog") {
        sc.components = genlog_components();
    } else if (name == "student") {
        sc.components = student_components();
    } else if (name == "gaussian") {
        sc.components = gaussian_components();
        sc.s = 0.0;
    } else {
        throw std::invalid_argument("make_scenario: unknown scenario '" + name + "'");
    }
    sc.truth = quadrature_truth(sc.components, sc.s);
    return sc;
}

MomentEstimate sample_moments(const Mat& points) {
    return weighted_moments(points, Vec::Constant(points.rows(), 1.0 / static_cast<double>(points.rows())));
}

MomentEstimate weighted_moments(const Mat& points, const Vec& weights) {
    if (points.cols() != 3 || points.rows() != weights.size() || points.rows() < 2) {
        throw std::invalid_argument("weighted_moments: need an N x 3 sample with N weights");
    }
    const double W = weights.sum();
    const double W2 = weights.squaredNorm();
    MomentEstimate m;
    for (Eigen::Index j = 0; j < 3; ++j) {
        const double mu = weights.dot(points.col(j)) / W;
        const double ss = weights.dot((points.col(j).array() - mu).square().matrix()) / W;
        // Reliability-weighted unbiased correction; equals n/(n-1) for equal weights.
        const double corr = 1.0 / (1.0 - W2 / (W * W));
        m.mean[static_cast<std::size_t>(j)] = mu;
        m.variance[static_cast<std::size_t>(j)] = ss * corr;
    }
    return m;
}

PercentageErrors percentage_errors(const MomentEstimate& est, const SumMoments& truth) {
    PercentageErrors pe;
    for (std::size_t i = 0; i < 3; ++i) {
        if (std::abs(truth.mean[i]) < 1e-12 || std::abs(truth.variance[i]) < 1e-12) {
            throw std::domain_error("percentage_errors: truth too close to zero");
        }
        pe.mean[i] = 100.0 * std::abs(est.mean[i] - truth.mean[i]) / std::abs(truth.mean[i]);
        pe.variance[i] = 100.0 * std::abs(est.variance[i] - truth.variance[i]) / std::abs(truth.variance[i]);
        pe.total_mean += pe.mean[i];
        pe.total_variance += pe.variance[i];
    }
    return pe;
}

ImportanceResult importance_sampler(const BenchmarkScenario& sc, std::size_t N, Rng& rng, double inflation) {
    if (!(inflation > 0.0)) throw std::invalid_argument("importance_sampler: inflation must be positive");
    Vec mu(3), var(3);
    for (int i = 0; i < 3; ++i) {
        mu[i] = sc.components[static_cast<std::size_t>(i)]->mean1();
        var[i] = inflation * sc.components[static_cast<std::size_t>(i)]->variance1();
    }
    const GaussianLinearSampler prop(sum_constraint(3, 1, Vec::Constant(1, sc.s)), var);
    ImportanceResult r;
    r.points.resize(static_cast<Eigen::Index>(N), 3);
    Vec logw(static_cast<Eigen::Index>(N));
    for (std::size_t n = 0; n < N; ++n) {
        const Vec y = prop.sample(mu, 1.0, rng);
        const auto k = static_cast<Eigen::Index>(n);
        r.points.row(k) = y.transpose();
        const double lq = -0.5 * ((y - mu).array().square() / var.array()).sum();
        logw[k] = log_target(sc, y) - lq;
    }
    const double mx = logw.maxCoeff();
    r.weights = (logw.array() - mx).exp();
    r.weights /= r.weights.sum();
    r.ess = 1.0 / r.weights.squaredNorm();
    r.degenerate = r.ess / static_cast<double>(N) < 1e-3;
    r.estimate = weighted_moments(r.points, r.weights);
    return r;
}

double tune_importance_inflation(const BenchmarkScenario& sc, Rng& rng, std::size_t pilot) {
    double best = 1.0, best_ess = -1.0;
    for (int k = -8; k <= 3; ++k) {
        const double f = std::ldexp(1.0, k);
        const double e = importance_sampler(sc, pilot, rng, f).ess;
        if (e > best_ess) {
            best_ess = e;
            best = f;
        }
    }
    return best;
}

ChainResult rw_mh_hyperplane(const BenchmarkScenario& sc, std::size_t N, double step, Rng& rng,
                             std::size_t burn_in) {
    if (!(step > 0.0)) throw std::invalid_argument("rw_mh_hyperplane: step must be positive");
    Vec y = start_point(sc);
    double lp = log_target(sc, y);
    ChainResult r;
    r.chain.resize(static_cast<Eigen::Index>(N), 3);
    std::size_t acc = 0;
    for (std::size_t it = 0; it < burn_in + N; ++it) {
        Vec z(3);
        for (int i = 0; i < 3; ++i) z[i] = step * rng.normal();
        Vec prop = y + (z.array() - z.mean()).matrix();
        prop.array() += (sc.s - prop.sum()) / 3.0;
        const double lq = log_target(sc, prop);
        if (std::log(rng.uniform()) < lq - lp) {
            y = prop;
            lp = lq;
            if (it >= burn_in) ++acc;
        }
        if (it >= burn_in) r.chain.row(static_cast<Eigen::Index>(it - burn_in)) = y.transpose();
    }
    r.acceptance = N ? static_cast<double>(acc) / static_cast<double>(N) : 0.0;
    if (N >= 2) r.estimate = sample_moments(r.chain);
    return r;
}

double tune_rw_step(const BenchmarkScenario& sc, Rng& rng, double target) {
    double lo = 1e-3, hi = 1e3;
    double step = 1.0;
    for (int it = 0; it < 30; ++it) {
        const double a = rw_mh_hyperplane(sc, 4000, step, rng, 1000).acceptance;
        if (std::abs(a - target) < 0.02) break;
        if (a > target) lo = step; else hi = step;
        step = std::sqrt(lo * hi);
    }
    return step;
}

ChainResult chmc_baseline(const BenchmarkScenario& sc, std::size_t N, Rng& rng, std::size_t burn_in,
                          ChmcConfig cfg) {
    GeneralConstraint g;
    const double s = sc.s;
    g.h = [s](const Vec& y) { return Vec::Constant(1, y.sum() - s); };
    g.jacobian = [](const Vec& y) { return Mat::Ones(1, y.size()); };
    Potential U;
    U.value = [&sc](const Vec& y) { return -log_target(sc, y); };
    U.gradient = [&sc](const Vec& y) {
        Vec gr(3);
        for (int i = 0; i < 3; ++i) gr[i] = -sc.components[static_cast<std::size_t>(i)]->d_log1(y[i]);
        return gr;
    };
    ChmcState st = chmc_init(start_point(sc), U, g, cfg);
    cfg = tune_step_size(st, U, g, cfg, rng);
    for (std::size_t i = 0; i < burn_in; ++i) chmc_step(st, U, g, cfg, rng);
    ChainResult r;
    r.chain.resize(static_cast<Eigen::Index>(N), 3);
    const std::size_t acc0 = st.diag.accepted;
    for (std::size_t i = 0; i < N; ++i) {
        chmc_step(st, U, g, cfg, rng);
        r.chain.row(static_cast<Eigen::Index>(i)) = st.y.transpose();
    }
    r.acceptance = N ? static_cast<double>(st.diag.accepted - acc0) / static_cast<double>(N) : 0.0;
    if (N >= 2) r.estimate = sample_moments(r.chain);
    return r;
}

Mat draws_matrix(const std::vector<FusionDraw>& draws) {
    if (draws.empty()) return Mat();
    Mat m(static_cast<Eigen::Index>(draws.size()), draws.front().y.size());
    for (std::size_t i = 0; i < draws.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = draws[i].y.transpose();
    return m;
}

MomentEstimate fusion_moments(const std::vector<FusionDraw>& draws) { return sample_moments(draws_matrix(draws)); }

}  // namespace cfusion
