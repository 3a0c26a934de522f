#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cfusion/baselines.hpp"
#include "cfusion/fusion.hpp"
#include "cfusion/gaussian_analysis.hpp"
#include "cfusion/imputation.hpp"
#include "cfusion/scenarios.hpp"
#include "cfusion/stats.hpp"

namespace cfusion::cli {

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add(std::vector<std::string> row) {
    if (row.size() != header_.size()) throw std::logic_error("Table: row width does not match header");
    rows_.push_back(std::move(row));
}

std::string Table::csv() const {
    std::ostringstream os;
    const auto line = [&os](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return os.str();
}

std::string num(double v) {
    if (!std::isfinite(v)) return "NA";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string num(std::size_t v) { return std::to_string(v); }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Stream k of the run; keeps samplers independent of each other's draws.
Rng stream(const Common& c, std::uint64_t k) { return Rng::substream(c.seed, k); }

Mat prefix(const Mat& m, std::size_t n) { return m.topRows(static_cast<Eigen::Index>(n)); }

double cf_T(const BenchmarkScenario& sc, const Common& c, double T) {
    if (T > 0.0) return T;
    return pilot_T(sum_problem(sc.components, sc.s, 1.0), {}, splitmix64(c.seed ^ 0x70696c6f74ULL)).T;
}

void check_samplers(const std::vector<std::string>& s) {
    for (const auto& name : s) {
        if (name != "cf" && name != "is" && name != "mh" && name != "chmc") {
            throw std::invalid_argument("unknown sampler '" + name + "'");
        }
    }
}

}  // namespace

Table run_toy(const ToyOptions& o, const Common& c) {
    if (o.n < 2) throw std::invalid_argument("toy: n must be at least 2");
    const FusionSampler fs(toy_problem(o.T));
    const auto draws = fs.draw_batch(o.n, c.seed, c.threads);
    std::vector<double> x1;
    std::size_t a1 = 0, a2 = 0;
    for (const auto& d : draws) {
        x1.push_back(d.y[0]);
        a1 += d.attempts_stage1;
        a2 += d.attempts_stage2;
    }
    const TabulatedCdf cdf(toy_log_density, -60.0, 60.0, 6000);
    const TestResult ks = ks_one_sample(x1, [&cdf](double x) { return cdf(x); });
    Table t({"n", "T", "ks_statistic", "p_value", "mean_x1", "var_x1", "stage1_per_draw", "stage2_per_draw"});
    const double n = static_cast<double>(o.n);
    t.add({num(o.n), num(o.T), num(ks.statistic), num(ks.p_value), num(mean(x1)), num(variance(x1)),
           num(static_cast<double>(a1) / n), num(static_cast<double>(a2) / n)});
    return t;
}

Table run_compare(const CompareOptions& o, const Common& c) {
    check_samplers(o.samplers);
    if (o.n_grid.empty()) throw std::invalid_argument("compare: empty n grid");
    const BenchmarkScenario sc = make_scenario(o.scenario);
    const std::size_t N = *std::max_element(o.n_grid.begin(), o.n_grid.end());
    if (*std::min_element(o.n_grid.begin(), o.n_grid.end()) < 2) {
        throw std::invalid_argument("compare: grid sizes must be at least 2");
    }
    Table t({"scenario", "sampler", "n", "pe_mean", "pe_var", "tuning"});
    for (std::size_t k = 0; k < o.samplers.size(); ++k) {
        const std::string& s = o.samplers[k];
        Rng rng = stream(c, k + 1);
        Mat pts;
        Vec w;
        double tuning = 0.0;
        if (s == "cf") {
            tuning = cf_T(sc, c, o.T);
            const FusionSampler fs(sum_problem(sc.components, sc.s, tuning));
            pts = draws_matrix(fs.draw_batch(N, splitmix64(c.seed + k), c.threads));
        } else if (s == "is") {
            tuning = tune_importance_inflation(sc, rng);
            const ImportanceResult r = importance_sampler(sc, N, rng, tuning);
            pts = r.points;
            w = r.weights;
        } else if (s == "mh") {
            tuning = tune_rw_step(sc, rng);
            pts = rw_mh_hyperplane(sc, N, tuning, rng).chain;
        } else {
            const ChainResult r = chmc_baseline(sc, N, rng);
            tuning = r.acceptance;
            pts = r.chain;
        }
        for (std::size_t n : o.n_grid) {
            const MomentEstimate est = w.size() ? weighted_moments(prefix(pts, n), w.head(static_cast<Eigen::Index>(n)))
                                                : sample_moments(prefix(pts, n));
            const PercentageErrors pe = percentage_errors(est, sc.truth);
            t.add({sc.name, s, num(n), num(pe.total_mean), num(pe.total_variance), num(tuning)});
        }
    }
    return t;
}

Table run_nonlinear(const NonlinearOptions& o, const Common& c) {
    if (o.seeds < 1) throw std::invalid_argument("nonlinear: seeds must be positive");
    const auto modes = nonlinear_modes();
    FusionOptions fo;
    fo.max_attempts = o.max_attempts;
    const FusionSampler fs(nonlinear_problem(o.T), fo);
    Table t({"seed", "n", "mode", "mode_x1", "mode_x2", "mode_x3", "min_distance", "covered"});
    for (int r = 0; r < o.seeds; ++r) {
        const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(r);
        const auto draws = fs.draw_batch(o.n, seed, c.threads);
        for (std::size_t m = 0; m < modes.size(); ++m) {
            double best = INFINITY;
            for (const auto& d : draws) best = std::min(best, (d.y - modes[m]).norm());
            t.add({std::to_string(seed), num(o.n), num(m + 1), num(modes[m][0]), num(modes[m][1]), num(modes[m][2]),
                   num(best), best <= o.radius ? "1" : "0"});
        }
    }
    return t;
}

Table run_timing(const TimingOptions& o, const Common& c) {
    check_samplers(o.samplers);
    if (o.n < 100) throw std::invalid_argument("timing: n must be at least 100");
    Table t({"scenario", "sampler", "n", "ess", "seconds", "seconds_per_1e4_ess"});
    std::uint64_t k = 0;
    for (const auto& name : o.scenarios) {
        const BenchmarkScenario sc = make_scenario(name);
        for (const auto& s : o.samplers) {
            Rng rng = stream(c, ++k);
            double ess_v = 0.0, secs = 0.0;
            if (s == "cf") {
                const FusionSampler fs(sum_problem(sc.components, sc.s, cf_T(sc, c, 0.0)));
                const auto t0 = Clock::now();
                fs.draw_batch(o.n, splitmix64(c.seed + k), c.threads);
                secs = seconds_since(t0);
                ess_v = static_cast<double>(o.n);
            } else if (s == "is") {
                const double f = tune_importance_inflation(sc, rng);
                const auto t0 = Clock::now();
                ess_v = importance_sampler(sc, o.n, rng, f).ess;
                secs = seconds_since(t0);
            } else if (s == "mh") {
                const double step = tune_rw_step(sc, rng);
                const auto t0 = Clock::now();
                const ChainResult r = rw_mh_hyperplane(sc, o.n, step, rng);
                secs = seconds_since(t0);
                ess_v = ess(r.chain);
            } else {
                const auto t0 = Clock::now();
                const ChainResult r = chmc_baseline(sc, o.n, rng);
                secs = seconds_since(t0);
                ess_v = ess(r.chain);
            }
            const std::string sec = c.wallclock ? num(secs) : "NA";
            const std::string per = c.wallclock ? num(secs * 1e4 / ess_v) : "NA";
            t.add({sc.name, s, num(o.n), num(ess_v), sec, per});
        }
    }
    return t;
}

namespace {

struct MseRow {
    std::string family;
    Vec alpha, var;
};

std::vector<MseRow> mse_rows(const std::vector<std::string>& families) {
    const auto v = [](double a, double b, double c) { return Vec((Vec(3) << a, b, c).finished()); };
    std::vector<MseRow> rows;
    for (const auto& f : families) {
        if (f == "gaussian") {
            rows.push_back({f, v(0.1, -1, 2), v(1, 4, 10)});
            rows.push_back({f, v(0.1, -2, 4), v(1, 4, 10)});
            rows.push_back({f, v(1, -3, 8), v(1, 4, 10)});
            rows.push_back({f, v(10, -3, -5), v(1, 2, 3)});
            rows.push_back({f, v(10, -3, -5), v(2, 2, 2)});
        } else if (f == "student") {
            rows.push_back({f, v(0.1, -2, 4), v(1, 4, 10)});
            rows.push_back({f, v(1, -3, 8), v(1, 4, 10)});
            rows.push_back({f, v(10, -3, -5), v(1, 2, 3)});
            rows.push_back({f, v(10, -3, -5), v(2, 2, 2)});
        } else if (f == "genlog") {
            const auto comps = genlog_components();
            Vec var(3);
            for (int i = 0; i < 3; ++i) var[i] = comps[static_cast<std::size_t>(i)]->variance1();
            rows.push_back({f, v(10, -3, -5), var});
        } else {
            throw std::invalid_argument("mse-table: unknown family '" + f + "'");
        }
    }
    return rows;
}

// Predictors with mean -alpha and the given variances; the truth is 0.
std::vector<UnivariatePtr> mse_components(const MseRow& r) {
    std::vector<UnivariatePtr> out;
    const auto genlog = genlog_components();
    for (int i = 0; i < 3; ++i) {
        const double mu = -r.alpha[i];
        if (r.family == "student") {
            constexpr double nu = 5.0;
            const double sigma = std::sqrt(r.var[i] * (nu - 2.0) / nu);
            out.push_back(std::make_shared<StudentTDensity>(StudentTParams{mu, sigma, nu}));
        } else {
            const auto& g = static_cast<const GenLogDensity&>(*genlog[static_cast<std::size_t>(i)]);
            GenLogParams p = g.params();
            p.C += mu - g.mean1();
            out.push_back(std::make_shared<GenLogDensity>(p));
        }
    }
    return out;
}

}  // namespace

Table run_mse_table(const MseOptions& o, const Common& c) {
    Table t({"family", "alpha1", "alpha2", "alpha3", "sigma2_1", "sigma2_2", "sigma2_3", "psi1", "psi2", "total",
             "var_reduction1", "var_reduction2", "var_reduction3", "mse_improv1", "mse_improv2", "mse_improv3",
             "devi_improv1", "devi_improv2", "devi_improv3", "var_improv1", "var_improv2", "var_improv3",
             "mc_total", "mc_se", "n"});
    const auto rows = mse_rows(o.families);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const MseRow& r = rows[k];
        Rng rng = stream(c, k + 1);
        const bool gauss = r.family == "gaussian";
        const std::size_t n = gauss ? o.n_gaussian : o.n_other;
        if (n < 2) throw std::invalid_argument("mse-table: draw counts must be at least 2");
        const auto N = static_cast<Eigen::Index>(n);
        Mat U(N, 3), C(N, 3);
        const Vec mu = -r.alpha;
        if (gauss) {
            const GaussianLinearSampler cond(sum_constraint(3, 1, Vec::Zero(1)), r.var);
            for (Eigen::Index j = 0; j < N; ++j) {
                for (int i = 0; i < 3; ++i) U(j, i) = rng.normal(mu[i], std::sqrt(r.var[i]));
                C.row(j) = cond.sample(mu, 1.0, rng).transpose();
            }
        } else {
            const auto comps = mse_components(r);
            for (Eigen::Index j = 0; j < N; ++j) {
                for (int i = 0; i < 3; ++i) U(j, i) = comps[static_cast<std::size_t>(i)]->sample(rng)[0];
            }
            const BenchmarkScenario sc{r.family, comps, 0.0, {}};
            const FusionSampler fs(sum_problem(comps, 0.0, cf_T(sc, c, 0.0)));
            C = draws_matrix(fs.draw_batch(n, splitmix64(c.seed + k), c.threads));
        }
        // Per-draw squared-error difference for the Monte Carlo total.
        const Vec diff = U.rowwise().squaredNorm() - C.rowwise().squaredNorm();
        const double md = diff.mean();
        const double sd = std::sqrt((diff.array() - md).square().sum() / static_cast<double>(N - 1));
        std::vector<std::string> row{r.family};
        for (int i = 0; i < 3; ++i) row.push_back(num(r.alpha[i]));
        for (int i = 0; i < 3; ++i) row.push_back(num(r.var[i]));
        if (gauss) {
            const MseDecomposition m = mse_improvement(r.alpha, r.var);
            row.insert(row.end(), {num(m.psi1), num(m.psi2), num(m.total())});
            for (int i = 0; i < 3; ++i) row.push_back(num(m.variance_reduction[i]));
        } else {
            row.insert(row.end(), 6, "NA");
        }
        std::vector<std::string> mse, devi, var;
        for (int i = 0; i < 3; ++i) {
            const auto u = U.col(i), v = C.col(i);
            const double mu_u = u.mean(), mu_v = v.mean();
            const double var_u = (u.array() - mu_u).square().sum() / static_cast<double>(N - 1);
            const double var_v = (v.array() - mu_v).square().sum() / static_cast<double>(N - 1);
            mse.push_back(num(u.squaredNorm() / static_cast<double>(N) - v.squaredNorm() / static_cast<double>(N)));
            devi.push_back(num(std::abs(mu_u) - std::abs(mu_v)));
            var.push_back(num(var_u - var_v));
        }
        row.insert(row.end(), mse.begin(), mse.end());
        row.insert(row.end(), devi.begin(), devi.end());
        row.insert(row.end(), var.begin(), var.end());
        row.insert(row.end(), {num(md), num(sd / std::sqrt(static_cast<double>(N))), num(n)});
        t.add(std::move(row));
    }
    return t;
}

namespace {

Mat read_matrix_csv(const std::string& path, std::vector<std::string>* header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    std::vector<std::vector<double>> rows;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        if (first) {
            first = false;
            if (header) *header = cells;
            continue;
        }
        std::vector<double> r;
        for (const auto& cell : cells) {
            std::size_t used = 0;
            const double v = std::stod(cell, &used);
            if (used != cell.size() && cell.find_first_not_of(" \r", used) != std::string::npos) {
                throw std::runtime_error("'" + path + "': bad number '" + cell + "'");
            }
            r.push_back(v);
        }
        if (!rows.empty() && r.size() != rows.front().size()) {
            throw std::runtime_error("'" + path + "': ragged rows");
        }
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw std::runtime_error("'" + path + "': no data rows");
    Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return m;
}

}  // namespace

Table run_impute(const ImputeCliOptions& o, const Common& c) {
    if (o.centre != "total" && o.centre != "mean") throw std::invalid_argument("impute: centre must be total or mean");
    ArGenLogModel model;
    ImputationTask task;
    Mat truth;
    if (o.data.empty()) {
        if (o.horizon < 1 || o.n <= o.horizon + o.K + 8) throw std::invalid_argument("impute: n too short for horizon");
        Rng rng = stream(c, 0);
        SyntheticConfig cfg;
        cfg.K = o.K;
        cfg.n = o.n;
        const SyntheticData sd = generate_synthetic(cfg, rng);
        const int n0 = o.n - o.horizon;
        model = fit_ar_genlog(o.K, sd.Y.topRows(n0), sd.Xi.topRows(n0));
        task.history = sd.Y.middleRows(n0 - o.K, o.K);
        truth = sd.Y.bottomRows(o.horizon);
        task.S = truth.rowwise().sum();
        if (o.spread) {
            task.Sigma.resize(o.horizon);
            for (int t = 0; t < o.horizon; ++t) {
                const double centre = o.centre == "total" ? task.S[t] : task.S[t] / static_cast<double>(truth.cols());
                task.Sigma[t] = (truth.row(t).array() - centre).square().sum();
            }
        }
        task.Xi = sd.Xi.bottomRows(o.horizon);
    } else {
        if (o.targets.empty()) throw std::invalid_argument("impute: a data file needs a targets file");
        const Mat Y = read_matrix_csv(o.data, nullptr);
        std::vector<std::string> th;
        const Mat S = read_matrix_csv(o.targets, &th);
        if (S.cols() < 1 || S.cols() > 2) throw std::invalid_argument("impute: targets need columns S[,Sigma]");
        model = fit_ar_genlog(o.K, Y, Mat(Y.rows(), 0));
        task.history = Y.bottomRows(o.K);
        task.S = S.col(0);
        if (S.cols() == 2) task.Sigma = S.col(1);
        task.Xi = Mat(S.rows(), 0);
    }
    task.N = o.paths;
    task.centre = o.centre == "total" ? SpreadCentre::total : SpreadCentre::mean;
    ImputeOptions io;
    io.tau = o.tau;
    io.seed = c.seed;
    io.threads = c.threads;
    const ImputationResult con = impute(model, task, io);
    const ImputationResult un = impute_unconstrained(model, task, io);
    Table t({"step", "series", "S", "mean", "var", "q025", "q975", "uncon_mean", "uncon_var", "truth"});
    for (std::size_t s = 0; s < con.steps.size(); ++s) {
        const auto& a = con.steps[s];
        const auto& b = un.steps[s];
        for (Eigen::Index i = 0; i < a.mean.size(); ++i) {
            const double tr = truth.size() ? truth(static_cast<Eigen::Index>(s), i) : NAN;
            t.add({num(s + 1), num(static_cast<std::size_t>(i + 1)), num(task.S[static_cast<Eigen::Index>(s)]),
                   num(a.mean[i]), num(a.var[i]), num(a.q025[i]), num(a.q975[i]), num(b.mean[i]), num(b.var[i]),
                   num(tr)});
        }
    }
    return t;
}

}  // namespace cfusion::cli
