#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "commands.hpp"

using namespace cfusion::cli;

namespace {

void emit(const Table& t, const std::string& out_dir, const std::string& name) {
    if (out_dir.empty()) {
        std::cout << t.csv();
        return;
    }
    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) / (name + ".csv");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
    f << t.csv();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained fusion sampler and experiment harness"};
    app.set_config("--config", "", "INI file; [section] names match subcommands");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);

    Common common;
    std::string out;
    app.add_option("--seed", common.seed, "Master seed")->capture_default_str();
    app.add_option("--threads", common.threads, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    app.add_option("--out", out, "Directory for <subcommand>.csv; stdout when omitted");
    app.add_flag("--wallclock", common.wallclock, "Report wall-clock timings (not reproducible)");

    ToyOptions toy;
    auto* c_toy = app.add_subcommand("toy", "KS check of the two-component toy problem");
    c_toy->add_option("--n", toy.n, "Draws")->capture_default_str();
    c_toy->add_option("--T", toy.T, "Bridge horizon")->check(CLI::PositiveNumber)->capture_default_str();

    CompareOptions cmp;
    auto* c_cmp = app.add_subcommand("compare", "Percentage-error curves of the samplers");
    c_cmp->add_option("--scenario", cmp.scenario, "genlog or student")
        ->check(CLI::IsMember({"genlog", "student"}))
        ->capture_default_str();
    c_cmp->add_option("--n-grid", cmp.n_grid, "Sample sizes")->delimiter(',')->capture_default_str();
    c_cmp->add_option("--samplers", cmp.samplers, "cf, is, mh, chmc")->delimiter(',')->capture_default_str();
    c_cmp->add_option("--T", cmp.T, "Fusion horizon; 0 runs a pilot")->check(CLI::NonNegativeNumber);

    NonlinearOptions nl;
    auto* c_nl = app.add_subcommand("nonlinear", "Mode coverage on the mean and variance constraint");
    c_nl->add_option("--n", nl.n, "Draws per seed")->capture_default_str();
    c_nl->add_option("--seeds", nl.seeds, "Consecutive seeds from --seed")->capture_default_str();
    c_nl->add_option("--T", nl.T, "Fusion horizon")->check(CLI::PositiveNumber)->capture_default_str();
    c_nl->add_option("--radius", nl.radius, "Coverage radius")->check(CLI::PositiveNumber)->capture_default_str();
    c_nl->add_option("--max-attempts", nl.max_attempts, "Proposal budget per draw")->capture_default_str();

    TimingOptions tm;
    auto* c_tm = app.add_subcommand("timing", "Effective sample sizes and cost per 1e4 ESS");
    c_tm->add_option("--scenarios", tm.scenarios, "genlog, student, gaussian")
        ->delimiter(',')
        ->check(CLI::IsMember({"genlog", "student", "gaussian"}))
        ->capture_default_str();
    c_tm->add_option("--samplers", tm.samplers, "cf, is, mh, chmc")->delimiter(',')->capture_default_str();
    c_tm->add_option("--n", tm.n, "Draws per sampler")->capture_default_str();

    MseOptions mse;
    auto* c_mse = app.add_subcommand("mse-table", "MSE change from sum conditioning");
    c_mse->add_option("--n-gaussian", mse.n_gaussian, "Monte Carlo draws for Gaussian rows")->capture_default_str();
    c_mse->add_option("--n-other", mse.n_other, "Fusion draws for other rows")->capture_default_str();
    c_mse->add_option("--families", mse.families, "gaussian, student, genlog")
        ->delimiter(',')
        ->check(CLI::IsMember({"gaussian", "student", "genlog"}))
        ->capture_default_str();

    ImputeCliOptions imp;
    auto* c_imp = app.add_subcommand("impute", "Sequential constrained imputation");
    c_imp->add_option("--data", imp.data, "CSV of training series, one column each, with header")
        ->check(CLI::ExistingFile);
    c_imp->add_option("--targets", imp.targets, "CSV with column S and optional Sigma, with header")
        ->check(CLI::ExistingFile);
    c_imp->add_option("--K", imp.K, "AR order")->check(CLI::PositiveNumber)->capture_default_str();
    c_imp->add_option("--n", imp.n, "Synthetic series length")->capture_default_str();
    c_imp->add_option("--horizon", imp.horizon, "Synthetic steps to impute")->capture_default_str();
    c_imp->add_option("--paths", imp.paths, "Sample paths")->check(CLI::Range(2, 1000000))->capture_default_str();
    c_imp->add_option("--tau", imp.tau, "T as a multiple of the mean error variance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_imp->add_flag("--spread", imp.spread, "Add the spread constraint on synthetic data");
    c_imp->add_option("--centre", imp.centre, "Spread centre: total or mean")
        ->check(CLI::IsMember({"total", "mean"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_toy) emit(run_toy(toy, common), out, "toy");
        if (*c_cmp) emit(run_compare(cmp, common), out, "compare");
        if (*c_nl) emit(run_nonlinear(nl, common), out, "nonlinear");
        if (*c_tm) emit(run_timing(tm, common), out, "timing");
        if (*c_mse) emit(run_mse_table(mse, common), out, "mse-table");
        if (*c_imp) emit(run_impute(imp, common), out, "impute");
    } catch (const std::exception& e) {
        std::cerr << "cfusion: " << app.get_subcommands().front()->get_name() << ": " << e.what() << '\n';
        return 1;
    }
    return 0;
}
