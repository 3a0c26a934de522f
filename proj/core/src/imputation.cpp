#include "cfusion/imputation.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cfusion {

namespace {

GenLogParams zero_mean(GenLogParams p) {
    p.C = 0.0;
    p.C = -genlog_cumulants(p)[0];
    return p;
}

}  // namespace

double ArGenLogModel::location(int i, const Mat& recent, const Vec& xi) const {
    const auto si = static_cast<std::size_t>(i);
    double mu = intercept[si];
    for (int r = 1; r <= K; ++r) mu += phi[si][r - 1] * recent(K - r, i);
    if (xi.size() > 0) mu += xi.dot(psi[si]);
    return mu;
}

ArGenLogModel fit_ar_genlog(int K, const Mat& Y, const Mat& Xi, const GenLogFitOptions& opts) {
    const auto n = Y.rows();
    const auto m = Y.cols();
    const auto p = Xi.cols();
    if (K < 1) throw std::invalid_argument("fit_ar_genlog: order must be >= 1");
    if (Xi.rows() != n && p > 0) throw std::invalid_argument("fit_ar_genlog: covariates have wrong length");
    if (n <= K + p + 8) throw std::invalid_argument("fit_ar_genlog: series too short for the design");
    ArGenLogModel model;
    model.K = K;
    const auto rows = n - K;
    const auto cols = 1 + K + p;
    for (Eigen::Index i = 0; i < m; ++i) {
        Mat X(rows, cols);
        Vec z(rows);
        for (Eigen::Index t = K; t < n; ++t) {
            const auto r = t - K;
            X(r, 0) = 1.0;
            for (int l = 1; l <= K; ++l) X(r, l) = Y(t - l, i);
            if (p > 0) X.row(r).tail(p) = Xi.row(t);
            z[r] = Y(t, i);
        }
        Eigen::ColPivHouseholderQR<Mat> qr(X);
        qr.setThreshold(1e-10);
        if (qr.rank() < cols) throw SingularDesign("fit_ar_genlog: regression design is rank deficient");
        const Vec beta = qr.solve(z);
        const Vec resid = z - X * beta;
        model.intercept.push_back(beta[0]);
        model.phi.push_back(beta.segment(1, K));
        model.psi.push_back(beta.tail(p));
        std::vector<double> res(resid.data(), resid.data() + resid.size());
        model.error.push_back(fit_genlog(res, opts));
    }
    return model;
}

SyntheticData generate_synthetic(const SyntheticConfig& cfg, Rng& rng) {
    if (cfg.m < 1 || cfg.K < 1 || cfg.p < 0 || cfg.n <= cfg.K) throw std::invalid_argument("generate_synthetic: bad sizes");
    if (!(cfg.spectral_radius >= 0.0 && cfg.spectral_radius < 1.0)) {
        throw std::invalid_argument("generate_synthetic: spectral radius must be in [0, 1)");
    }
    if (cfg.error.empty()) throw std::invalid_argument("generate_synthetic: need error parameters");
    SyntheticData d;
    ArGenLogModel& M = d.model;
    M.K = cfg.K;
    for (int i = 0; i < cfg.m; ++i) {
        Vec w(cfg.K);
        for (int r = 0; r < cfg.K; ++r) w[r] = rng.uniform(0.2, 1.0) * (rng.uniform() < 0.8 ? 1.0 : -1.0);
        Vec phi = cfg.spectral_radius * w / w.cwiseAbs().sum();
        Vec psi(cfg.p);
        for (int k = 0; k < cfg.p; ++k) psi[k] = 0.5 * rng.normal();
        M.intercept.push_back(cfg.level * (1.0 - phi.sum()));
        M.phi.push_back(phi);
        M.psi.push_back(psi);
        M.error.push_back(zero_mean(cfg.error[static_cast<std::size_t>(i) % cfg.error.size()]));
    }
    const int burn = 200;
    const int total = burn + cfg.n;
    Mat Y = Mat::Constant(total, cfg.m, cfg.level);
    Mat Xi(total, cfg.p);
    for (int t = 0; t < total; ++t) {
        for (int k = 0; k < cfg.p; ++k) Xi(t, k) = rng.normal();
    }
    for (int t = cfg.K; t < total; ++t) {
        const Mat recent = Y.middleRows(t - cfg.K, cfg.K);
        const Vec xi = Xi.row(t).transpose();
        for (int i = 0; i < cfg.m; ++i) {
            GenLogParams e = M.error[static_cast<std::size_t>(i)];
            e.C += M.location(i, recent, xi);
            Y(t, i) = GenLogDensity(e).sample1(rng);
        }
    }
    d.Y = Y.bottomRows(cfg.n);
    d.Xi = Xi.bottomRows(cfg.n);
    return d;
}

GeneralConstraint spread_constraint(int m, double S, double Sigma, SpreadCentre centre) {
    if (m < 3) throw std::invalid_argument("spread_constraint: need at least three series");
    const double md = m;
    const double c = centre == SpreadCentre::total ? S : S / md;
    const Vec c0 = Vec::Constant(m, c);
    const Vec p = Vec::Constant(m, S / md);
    const double off = (c0 - p).squaredNorm();
    const double rho2 = Sigma - off;
    if (!(rho2 > 0.0)) throw std::invalid_argument("spread_constraint: constraint set is empty");
    const double rho = std::sqrt(rho2);
    GeneralConstraint g;
    g.h = [S, Sigma, c0](const Vec& y) {
        Vec r(2);
        r << y.sum() - S, (y - c0).squaredNorm() - Sigma;
        return r;
    };
    g.jacobian = [c0](const Vec& y) {
        Mat J(2, y.size());
        J.row(0).setOnes();
        J.row(1) = 2.0 * (y - c0).transpose();
        return J;
    };
    g.distance_lower_bound = [S, rho, md](const Vec& y) {
        const double a = (y.sum() - S) / std::sqrt(md);
        const Vec v = (y.array() - y.mean()).matrix();
        const double radial = v.norm() - rho;
        return std::sqrt(a * a + radial * radial);
    };
    g.uniform_sampler = [p, rho](Rng& rng) -> Vec {
        for (;;) {
            Vec z(p.size());
            for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = rng.normal();
            z.array() -= z.mean();
            const double n = z.norm();
            if (n > 1e-12) return p + rho * z / n;
        }
    };
    return g;
}

double empirical_quantile(std::vector<double> v, double q) {
    if (v.empty()) throw std::invalid_argument("empirical_quantile: empty sample");
    std::sort(v.begin(), v.end());
    const double h = (static_cast<double>(v.size()) - 1.0) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

StepSummary summarise(const Mat& draws) {
    const auto m = draws.cols();
    StepSummary s{Vec(m), Vec(m), Vec(m), Vec(m)};
    const double n = static_cast<double>(draws.rows());
    for (Eigen::Index i = 0; i < m; ++i) {
        const Vec col = draws.col(i);
        s.mean[i] = col.mean();
        s.var[i] = n > 1 ? (col.array() - s.mean[i]).square().sum() / (n - 1.0) : 0.0;
        std::vector<double> v(col.data(), col.data() + col.size());
        s.q025[i] = empirical_quantile(v, 0.025);
        s.q975[i] = empirical_quantile(v, 0.975);
    }
    return s;
}

namespace {

ImputationResult run_paths(const ArGenLogModel& model, const ImputationTask& task, const ImputeOptions& opts,
                           bool constrained) {
    const int m = model.series();
    const int K = model.K;
    const auto H = task.S.size();
    if (task.history.rows() != K || task.history.cols() != m) {
        throw std::invalid_argument("impute: history must be K x m");
    }
    if (model.covariates() > 0 && (task.Xi.rows() != H || task.Xi.cols() != model.covariates())) {
        throw std::invalid_argument("impute: covariates must be horizon x p");
    }
    if (task.Sigma.size() != 0 && task.Sigma.size() != H) throw std::invalid_argument("impute: Sigma has wrong length");
    if (task.N < 2) throw std::invalid_argument("impute: need at least two paths");
    double mean_var = 0.0;
    for (const auto& e : model.error) mean_var += genlog_cumulants(e)[1];
    mean_var /= m;
    const double T = opts.tau * mean_var;

    ImputationResult res;
    res.draws.assign(static_cast<std::size_t>(H), Mat(task.N, m));
    std::vector<std::vector<std::size_t>> attempts(static_cast<std::size_t>(task.N),
                                                   std::vector<std::size_t>(static_cast<std::size_t>(H), 0));
    parallel_for(static_cast<std::size_t>(task.N), opts.threads, [&](std::size_t j) {
        Rng rng = Rng::substream(opts.seed, j);
        Mat recent = task.history;
        for (Eigen::Index t = 0; t < H; ++t) {
            const Vec xi = model.covariates() > 0 ? Vec(task.Xi.row(t).transpose()) : Vec();
            std::vector<DensityPtr> comps;
            Vec y(m);
            for (int i = 0; i < m; ++i) {
                GenLogParams e = model.error[static_cast<std::size_t>(i)];
                e.C += model.location(i, recent, xi);
                comps.push_back(std::make_shared<GenLogDensity>(e));
            }
            if (constrained) {
                Constraint con = task.Sigma.size() == 0
                                     ? Constraint(sum_constraint(m, 1, Vec::Constant(1, task.S[t])))
                                     : Constraint(spread_constraint(m, task.S[t], task.Sigma[t], task.centre));
                try {
                    const FusionDraw d = FusionSampler({comps, con, T}, opts.fusion).draw(rng);
                    y = d.y;
                    attempts[j][static_cast<std::size_t>(t)] = d.attempts_stage1;
                } catch (const BudgetExhausted& err) {
                    throw std::runtime_error("impute: step " + std::to_string(t + 1) + ": " + err.what());
                }
            } else {
                for (int i = 0; i < m; ++i) y[i] = comps[static_cast<std::size_t>(i)]->sample(rng)[0];
            }
            res.draws[static_cast<std::size_t>(t)].row(static_cast<Eigen::Index>(j)) = y.transpose();
            if (K > 1) recent.topRows(K - 1) = recent.bottomRows(K - 1).eval();
            recent.row(K - 1) = y.transpose();
        }
    });
    for (Eigen::Index t = 0; t < H; ++t) {
        res.steps.push_back(summarise(res.draws[static_cast<std::size_t>(t)]));
        std::size_t a = 0;
        for (const auto& row : attempts) a += row[static_cast<std::size_t>(t)];
        res.attempts.push_back(a);
    }
    return res;
}

}  // namespace

ImputationResult impute(const ArGenLogModel& model, const ImputationTask& task, const ImputeOptions& opts) {
    return run_paths(model, task, opts, true);
}

ImputationResult impute_unconstrained(const ArGenLogModel& model, const ImputationTask& task,
                                      const ImputeOptions& opts) {
    return run_paths(model, task, opts, false);
}

}  // namespace cfusion
