// Acceptance suite. `acceptance N` runs criterion N; no argument runs all.
// Each criterion prints one line: "criterion N: PASS|FAIL <details>".

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "cfusion/baselines.hpp"
#include "cfusion/bridge.hpp"
#include "cfusion/constraints.hpp"
#include "cfusion/fusion.hpp"
#include "cfusion/gaussian_analysis.hpp"
#include "cfusion/imputation.hpp"
#include "cfusion/scenarios.hpp"
#include "cfusion/stats.hpp"
#include "cfusion/thinning.hpp"
#include "commands.hpp"
#include "oracles.hpp"

using namespace cfusion;
namespace orc = cfusion::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = false;
    std::string details;
};

std::string fmt(const char* f, double a) {
    char b[64];
    std::snprintf(b, sizeof b, f, a);
    return b;
}

double elapsed(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

using Rows = std::vector<std::map<std::string, std::string>>;

Rows parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> header;
    Rows rows;
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) out.push_back(cell);
        return out;
    };
    if (!std::getline(in, line)) return rows;
    header = split(line);
    while (std::getline(in, line)) {
        const auto cells = split(line);
        std::map<std::string, std::string> r;
        for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) r[header[i]] = cells[i];
        rows.push_back(std::move(r));
    }
    return rows;
}

// 1. Toy problem: KS against the normalised density.
Verdict criterion1() {
    const auto t0 = Clock::now();
    const FusionSampler fs(toy_problem(1.0));
    const TabulatedCdf cdf(toy_log_density, -60.0, 60.0, 6000);
    int passed = 0;
    double worst = 1.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto draws = fs.draw_batch(10000, seed, workers());
        std::vector<double> x;
        for (const auto& d : draws) x.push_back(d.y[0]);
        const double p = ks_one_sample(x, [&](double z) { return cdf(z); }).p_value;
        worst = std::min(worst, p);
        passed += p > 0.01;
    }
    const double secs = elapsed(t0);
    return {passed >= 9 && secs < 120.0,
            std::to_string(passed) + "/10 seeds with p > 0.01, min p " + fmt("%.3g", worst) + ", " + fmt("%.1f", secs) + " s"};
}

// 2. Gaussian components under a sum constraint against closed-form conditionals.
Verdict criterion2() {
    const auto t0 = Clock::now();
    Rng rng(2024);
    int bad = 0, checks = 0;
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        const int m = 2 + static_cast<int>(rng.uniform() * 3.0);
        Vec mu(m), var(m);
        std::vector<DensityPtr> comps;
        for (int i = 0; i < m; ++i) {
            mu[i] = rng.normal(0.0, 2.0);
            var[i] = std::pow(rng.uniform(0.5, 1.5), 2);
            comps.push_back(std::make_shared<GaussianDensity>(mu[i], std::sqrt(var[i])));
        }
        const double s = mu.sum() + rng.normal(0.0, std::sqrt(var.sum()));
        FusionProblem p{comps, sum_constraint(m, 1, Vec::Constant(1, s)), 1.0};
        p.T = pilot_T(p, {}, 100 + static_cast<std::uint64_t>(rep)).T;
        const auto draws = FusionSampler(p).draw_batch(10000, 200 + static_cast<std::uint64_t>(rep), workers());
        const Mat Y = draws_matrix(draws);
        const auto g = condition_on_sum(mu, var, s);
        const double n = static_cast<double>(Y.rows());
        const Vec mean = Y.colwise().mean().transpose();
        const Mat C = (Y.rowwise() - mean.transpose()).transpose() * (Y.rowwise() - mean.transpose()) / (n - 1.0);
        for (int i = 0; i < m; ++i) {
            const double z = std::abs(mean[i] - g.mu_star[i]) / std::sqrt(g.sigma_star(i, i) / n);
            worst = std::max(worst, z);
            bad += z > 4.0;
            ++checks;
            for (int j = i; j < m; ++j) {
                const double se =
                    std::sqrt((g.sigma_star(i, i) * g.sigma_star(j, j) + g.sigma_star(i, j) * g.sigma_star(i, j)) / n);
                const double zc = std::abs(C(i, j) - g.sigma_star(i, j)) / se;
                worst = std::max(worst, zc);
                bad += zc > 4.0;
                ++checks;
            }
        }
    }
    const double secs = elapsed(t0);
    return {bad == 0 && secs < 300.0, std::to_string(checks - bad) + "/" + std::to_string(checks) +
                                          " moments within 4 SE, max z " + fmt("%.2f", worst) + ", " + fmt("%.1f", secs) +
                                          " s"};
}

struct SeedPe {
    double cf_mean = 0, cf_var = 0, cf1k_mean = 0, cf1k_var = 0, mh1k_mean = 0, mh1k_var = 0;
};

SeedPe compare_seed(const std::string& scenario, std::uint64_t seed, bool with_mh) {
    cli::CompareOptions o;
    o.scenario = scenario;
    o.n_grid = {1000, 10000};
    o.samplers = with_mh ? std::vector<std::string>{"cf", "mh"} : std::vector<std::string>{"cf"};
    cli::Common c;
    c.seed = seed;
    c.threads = workers();
    SeedPe r;
    for (const auto& row : parse_csv(cli::run_compare(o, c).csv())) {
        const double pm = std::stod(row.at("pe_mean")), pv = std::stod(row.at("pe_var"));
        const bool big = row.at("n") == "10000";
        if (row.at("sampler") == "cf") {
            (big ? r.cf_mean : r.cf1k_mean) = pm;
            (big ? r.cf_var : r.cf1k_var) = pv;
        } else if (!big) {
            r.mh1k_mean = pm;
            r.mh1k_var = pv;
        }
    }
    return r;
}

std::string pe_list(const std::vector<SeedPe>& v, bool big) {
    std::string s;
    for (const auto& r : v) {
        s += (s.empty() ? "" : " ") + fmt("%.2f", big ? r.cf_mean : r.cf1k_mean) + "/" +
             fmt("%.2f", big ? r.cf_var : r.cf1k_var);
    }
    return s;
}

// 3. GenLog scenario: CF total PE below 5% at N = 1e4 on a majority of 5 seeds.
Verdict criterion3() {
    const auto t0 = Clock::now();
    std::vector<SeedPe> v;
    int ok = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        v.push_back(compare_seed("genlog", seed, false));
        ok += v.back().cf_mean < 5.0 && v.back().cf_var < 5.0;
    }
    const double secs = elapsed(t0);
    return {ok >= 3 && secs < 600.0, std::to_string(ok) + "/5 seeds below 5% (PE mean/var: " + pe_list(v, true) + "), " +
                                         fmt("%.1f", secs) + " s"};
}

// 4. Student scenario: the same bar, and CF at N = 1e3 no worse than RW-MH.
Verdict criterion4() {
    const auto t0 = Clock::now();
    std::vector<SeedPe> v;
    int ok = 0, mean_wins = 0, var_wins = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        v.push_back(compare_seed("student", seed, true));
        const auto& r = v.back();
        ok += r.cf_mean < 5.0 && r.cf_var < 5.0;
        mean_wins += r.cf1k_mean <= r.mh1k_mean;
        var_wins += r.cf1k_var <= r.mh1k_var;
    }
    const double secs = elapsed(t0);
    return {ok >= 3 && mean_wins >= 3 && var_wins >= 3 && secs < 600.0,
            std::to_string(ok) + "/5 seeds below 5% (PE mean/var: " + pe_list(v, true) + "); CF <= MH at 1e3 on " +
                std::to_string(mean_wins) + "/5 (mean), " + std::to_string(var_wins) + "/5 (var), " + fmt("%.1f", secs) +
                " s"};
}

// 5. Nonlinear constraint: all four modes visited by 600 draws.
Verdict criterion5() {
    const auto t0 = Clock::now();
    cli::NonlinearOptions o;
    o.n = 600;
    o.seeds = 10;
    o.max_attempts = 100000000;
    cli::Common c;
    c.seed = 1;
    c.threads = workers();
    std::map<std::string, int> covered;
    for (const auto& row : parse_csv(cli::run_nonlinear(o, c).csv())) covered[row.at("seed")] += row.at("covered") == "1";
    int ok = 0;
    for (const auto& [seed, n] : covered) ok += n == 4;
    return {ok >= 9, std::to_string(ok) + "/10 seeds found all 4 modes within 0.5, " + fmt("%.1f", elapsed(t0)) + " s"};
}

// 6. Gaussian row (10, -3, -5) / (2, 2, 2).
Verdict criterion6() {
    const auto t0 = Clock::now();
    Vec alpha(3), var(3);
    alpha << 10.0, -3.0, -5.0;
    var << 2.0, 2.0, 2.0;
    const auto d = mse_improvement(alpha, var);
    bool ok = std::abs(d.psi2 - 2.0) < 1e-12;
    for (int i = 0; i < 3; ++i) ok = ok && std::abs(d.variance_reduction[i] - 0.667) < 5e-4;
    // Truth y = 0, predictors centred at -alpha; compare the raw and the
    // sum-conditioned predictor on independent draws.
    const Vec mu = -alpha;
    GaussianLinearSampler cond({Mat::Ones(1, 3), Vec::Zero(1)}, var);
    Rng rng(6);
    const int n = 100000;
    std::vector<double> diff(n);
    for (int k = 0; k < n; ++k) {
        Vec u(3);
        for (int i = 0; i < 3; ++i) u[i] = mu[i] + std::sqrt(var[i]) * rng.normal();
        const Vec c = cond.sample(mu, 1.0, rng);
        diff[static_cast<std::size_t>(k)] = u.squaredNorm() - c.squaredNorm();
    }
    const auto ms = orc::mean_se(diff);
    const bool mc = std::abs(ms.mean - d.total()) <= 4.0 * ms.se;
    const double secs = elapsed(t0);
    return {ok && mc && secs < 60.0, "psi2 " + fmt("%.6f", d.psi2) + ", var reduction " +
                                         fmt("%.4f", d.variance_reduction[0]) + ", MC " + fmt("%.3f", ms.mean) + " +- " +
                                         fmt("%.3f", ms.se) + " vs " + fmt("%.4f", d.total()) + ", " + fmt("%.1f", secs) + " s"};
}

// 7. Bridge events against fine-grid oracles with per-step crossing correction.
Verdict criterion7() {
    const auto t0 = Clock::now();
    const int steps = 10000, paths = 50000, trials = 100000;
    std::vector<std::string> notes;
    bool ok = true;
    auto record = [&](const std::string& name, const orc::MeanSe& ours, const orc::MeanSe& oracle) {
        const bool a = orc::agree(ours, oracle, 3.0);
        ok = ok && a;
        notes.push_back(name + " " + fmt("%.4f", ours.mean) + " vs " + fmt("%.4f", oracle.mean) + (a ? "" : " (!)"));
    };

    struct Fixture {
        double T, x, y, K;
    };
    int idx = 0;
    for (const Fixture f : {Fixture{1.0, 0.0, 0.0, 1.0}, Fixture{2.0, 0.3, -0.5, 1.2}, Fixture{0.5, 0.9, 0.1, 1.0}}) {
        Rng grid_rng(700 + static_cast<std::uint64_t>(idx)), rng(710 + static_cast<std::uint64_t>(idx));
        ++idx;
        std::vector<double> stay(paths);
        for (int k = 0; k < paths; ++k) {
            const auto w = orc::bridge_grid(f.T, f.x, f.y, steps, grid_rng);
            stay[static_cast<std::size_t>(k)] = orc::stay_probability(w, f.T / steps, -f.K, f.K);
        }
        std::size_t hits = 0;
        for (int k = 0; k < trials; ++k) hits += crossing_event(f.T, f.x, f.y, f.K, rng);
        record("crossing(" + fmt("%g", f.T) + "," + fmt("%g", f.x) + "," + fmt("%g", f.y) + "," + fmt("%g", f.K) + ")",
               orc::bernoulli_se(hits, trials), orc::mean_se(stay));
    }

    {
        // Layer index for a_i = 0.5 i, x = y = 0, T = 1.
        const LayerSequence a(0.5);
        Rng grid_rng(720), rng(721);
        const int levels = 3;
        std::vector<std::vector<double>> cdf(levels, std::vector<double>(paths));
        for (int k = 0; k < paths; ++k) {
            const auto w = orc::bridge_grid(1.0, 0.0, 0.0, steps, grid_rng);
            for (int i = 0; i < levels; ++i) {
                cdf[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    orc::stay_probability(w, 1.0 / steps, -a(i + 1), a(i + 1));
            }
        }
        std::vector<std::size_t> count(levels, 0);
        for (int k = 0; k < trials; ++k) {
            const int I = sample_layer(1.0, 0.0, 0.0, a, rng);
            for (int i = 0; i < levels; ++i) count[static_cast<std::size_t>(i)] += I <= i + 1;
        }
        for (int i = 0; i < levels; ++i) {
            record("P(I<=" + std::to_string(i + 1) + ")", orc::bernoulli_se(count[static_cast<std::size_t>(i)], trials),
                   orc::mean_se(cdf[static_cast<std::size_t>(i)]));
        }
    }

    {
        // Bessel-3 bridge 0.5 -> 0.5 on [0, 1] below K = 1, and below 1 given below 1.5.
        Rng grid_rng(730), rng(731);
        std::vector<double> pos(paths), in1(paths), in15(paths);
        for (int k = 0; k < paths; ++k) {
            const auto w = orc::bridge_grid(1.0, 0.5, 0.5, steps, grid_rng);
            const auto s = static_cast<std::size_t>(k);
            pos[s] = orc::stay_probability(w, 1.0 / steps, 0.0, 1e6);
            in1[s] = orc::stay_probability(w, 1.0 / steps, 0.0, 1.0);
            in15[s] = orc::stay_probability(w, 1.0 / steps, 0.0, 1.5);
        }
        // Ratio of means with a delta-method standard error.
        auto ratio = [&](const std::vector<double>& num, const std::vector<double>& den) {
            const auto a = orc::mean_se(num), b = orc::mean_se(den);
            const double r = a.mean / b.mean;
            std::vector<double> lin(num.size());
            for (std::size_t i = 0; i < num.size(); ++i) lin[i] = (num[i] - r * den[i]) / b.mean;
            return orc::MeanSe{r, orc::mean_se(lin).se};
        };
        std::size_t h1 = 0, h2 = 0;
        for (int k = 0; k < trials; ++k) {
            h1 += bessel_noleave_event(1.0, 0.5, 0.5, 1.0, std::nullopt, rng);
            h2 += bessel_noleave_event(1.0, 0.5, 0.5, 1.0, 1.5, rng);
        }
        record("bessel(K=1)", orc::bernoulli_se(h1, trials), ratio(in1, pos));
        record("bessel(K=1;L=1.5)", orc::bernoulli_se(h2, trials), ratio(in1, in15));
    }
    const double secs = elapsed(t0);
    std::string d;
    for (const auto& n : notes) d += (d.empty() ? "" : "; ") + n;
    return {ok && secs < 600.0, d + ", " + fmt("%.1f", secs) + " s"};
}

// 8. Thinning acceptance against the path-integral oracle.
Verdict criterion8() {
    const auto t0 = Clock::now();
    std::vector<std::pair<std::string, DensityPtr>> shipped = {
        {"gaussian", std::make_shared<GaussianDensity>(0.0, 1.0)},
        {"gaussian(1.5,0.7)", std::make_shared<GaussianDensity>(1.5, 0.7)},
        {"normal", std::make_shared<NormalDensity>(-1.0, 1.3)},
        {"t3", std::make_shared<StudentTDensity>(StudentTParams{0.0, 1.0, 3.0})},
        {"t5", std::make_shared<StudentTDensity>(StudentTParams{0.0, 1.0, 5.0})},
    };
    const char* gl_names[] = {"genlog1", "genlog2", "genlog3"};
    const char* st_names[] = {"student1", "student2", "student3"};
    const char* nl_names[] = {"nonlinear1", "nonlinear2", "nonlinear3"};
    for (std::size_t i = 0; i < 3; ++i) {
        shipped.emplace_back(gl_names[i], genlog_components()[i]);
        shipped.emplace_back(st_names[i], student_components()[i]);
        shipped.emplace_back(nl_names[i], nonlinear_components()[i]);
    }
    const int steps = 2000, paths = 20000, trials = 40000;
    Rng rng(800);
    int checks = 0, bad = 0;
    double worst = 0.0;
    std::string worst_name;
    for (const auto& [name, d] : shipped) {
        const auto* u = dynamic_cast<const UnivariateDensity*>(d.get());
        auto centre = [&](double p) { return u ? u->quantile(p) : d->mean()[0] + std::sqrt(d->variance()[0]) * (2.0 * p - 1.0); };
        for (int pair = 0; pair < 3; ++pair) {
            const double x = centre(rng.uniform(0.2, 0.8)), y = centre(rng.uniform(0.2, 0.8));
            const double T = rng.uniform(0.2, 1.0);
            std::vector<double> oracle(paths);
            for (int k = 0; k < paths; ++k) {
                const auto w = orc::bridge_grid(T, x, y, steps, rng);
                oracle[static_cast<std::size_t>(k)] =
                    std::exp(-orc::path_integral(w, T / steps, [&](double v) { return d->phi(Vec::Constant(1, v)); }));
            }
            const auto o = orc::mean_se(oracle);
            for (bool layered : {false, true}) {
                if (layered && !d->phi_global_bound()) continue;
                ThinningOptions opts;
                opts.force_layered = layered;
                std::size_t hits = 0;
                for (int k = 0; k < trials; ++k) {
                    hits += accept_path(*d, Vec::Constant(1, x), Vec::Constant(1, y), T, opts, rng).accepted;
                }
                const auto e = orc::bernoulli_se(hits, trials);
                const double z = std::abs(e.mean - o.mean) / std::hypot(e.se, o.se);
                ++checks;
                bad += z > 4.0;
                if (z > worst) {
                    worst = z;
                    worst_name = name + (layered ? "/layered" : "");
                }
            }
        }
    }
    const double secs = elapsed(t0);
    return {bad == 0 && secs < 600.0, std::to_string(checks - bad) + "/" + std::to_string(checks) +
                                          " within 4 SE over " + std::to_string(shipped.size()) + " densities, max z " +
                                          fmt("%.2f", worst) + " (" + worst_name + "), " + fmt("%.1f", secs) + " s"};
}

// 9. Imputation on synthetic data: conservation, coverage, variance reduction.
Verdict criterion9() {
    const auto t0 = Clock::now();
    const int reps = 200, H = 3, N = 500;
    std::size_t covered = 0, total = 0, var_ok = 0, var_checks = 0;
    double worst_sum = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
        Rng rng(9000 + static_cast<std::uint64_t>(rep));
        SyntheticConfig cfg;
        const auto data = generate_synthetic(cfg, rng);
        const int n = static_cast<int>(data.Y.rows());
        const auto model = fit_ar_genlog(cfg.K, data.Y.topRows(n - H), data.Xi.topRows(n - H));
        ImputationTask task;
        task.history = data.Y.middleRows(n - H - cfg.K, cfg.K);
        task.Xi = data.Xi.bottomRows(H);
        const Mat truth = data.Y.bottomRows(H);
        task.S = truth.rowwise().sum();
        task.N = N;
        ImputeOptions o;
        o.seed = 19000 + static_cast<std::uint64_t>(rep);
        o.threads = workers();
        const auto con = impute(model, task, o);
        const auto unc = impute_unconstrained(model, task, o);
        for (int t = 0; t < H; ++t) {
            const auto ts = static_cast<std::size_t>(t);
            for (int j = 0; j < N; ++j) worst_sum = std::max(worst_sum, std::abs(con.draws[ts].row(j).sum() - task.S[t]));
            for (int i = 0; i < cfg.m; ++i) {
                covered += truth(t, i) >= con.steps[ts].q025[i] && truth(t, i) <= con.steps[ts].q975[i];
                ++total;
            }
            var_ok += con.steps[ts].var.sum() <= unc.steps[ts].var.sum();
            ++var_checks;
        }
    }
    const double coverage = static_cast<double>(covered) / static_cast<double>(total);
    const double secs = elapsed(t0);
    const bool pass = worst_sum <= 1e-8 && coverage >= 0.90 && coverage <= 0.99 && var_ok == var_checks && secs < 1200.0;
    return {pass, "max |sum - S| " + fmt("%.2e", worst_sum) + ", coverage " + fmt("%.4f", coverage) + ", variance reduced at " +
                      std::to_string(var_ok) + "/" + std::to_string(var_checks) + " steps, " + fmt("%.1f", secs) + " s"};
}

// 10. Every subcommand gives byte-identical output for 1 and 4 threads.
Verdict criterion10() {
    const auto t0 = Clock::now();
    const auto dir = std::filesystem::temp_directory_path() / ("cfusion_c10_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto ini = dir / "small.ini";
    {
        std::ofstream f(ini);
        f << "seed = 7\n"
             "[toy]\nn = 500\n"
             "[compare]\nscenario = genlog\nn-grid = 100,300\nsamplers = cf,is,mh,chmc\n"
             "[nonlinear]\nn = 10\nseeds = 2\n"
             "[timing]\nscenarios = genlog,student\nsamplers = cf,is,mh,chmc\nn = 300\n"
             "[mse-table]\nn-gaussian = 2000\nn-other = 200\n"
             "[impute]\nn = 300\nhorizon = 3\npaths = 40\nspread = true\n";
    }
    const std::vector<std::string> subs = {"toy", "compare", "nonlinear", "timing", "mse-table", "impute"};
    std::string failed;
    for (const auto& s : subs) {
        std::string out[2];
        int k = 0;
        for (int th : {1, 4}) {
            const auto od = dir / (s + "_" + std::to_string(th));
            const std::string cmd = std::string("\"") + CFUSION_CLI_PATH + "\" --config \"" + ini.string() + "\" --threads " +
                                    std::to_string(th) + " --out \"" + od.string() + "\" " + s;
            if (std::system(cmd.c_str()) != 0) {
                failed += " " + s + "(exit)";
                break;
            }
            std::ifstream f(od / (s + ".csv"), std::ios::binary);
            std::ostringstream ss;
            ss << f.rdbuf();
            out[k++] = ss.str();
        }
        if (k == 2 && (out[0] != out[1] || out[0].empty())) failed += " " + s;
    }
    std::filesystem::remove_all(dir);
    return {failed.empty(), (failed.empty() ? std::string("6/6 subcommands identical for 1 and 4 threads")
                                            : "differs:" + failed) +
                                ", " + fmt("%.1f", elapsed(t0)) + " s"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Verdict()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                            criterion6, criterion7, criterion8, criterion9, criterion10};
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    if (which.empty()) {
        for (int i = 1; i <= 10; ++i) which.push_back(i);
    }
    int failures = 0;
    for (int n : which) {
        if (n < 1 || n > 10) {
            std::cerr << "acceptance: no criterion " << n << '\n';
            return 2;
        }
        Verdict v;
        try {
            v = criteria[static_cast<std::size_t>(n - 1)]();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << ' ' << v.details << std::endl;
        failures += !v.pass;
    }
    return failures == 0 ? 0 : 1;
}
