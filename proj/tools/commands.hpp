#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cfusion::cli {

// Rows of already formatted cells; rendered as comma-separated text.
class Table {
public:
    explicit Table(std::vector<std::string> header);
    void add(std::vector<std::string> row);
    std::string csv() const;
    std::size_t rows() const { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// Fixed-precision rendering; "NA" for non-finite values.
std::string num(double v);
std::string num(std::size_t v);

struct Common {
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool wallclock = false;
};

struct ToyOptions {
    std::size_t n = 10000;
    double T = 1.0;
};

struct CompareOptions {
    std::string scenario = "genlog";
    std::vector<std::size_t> n_grid = {100, 300, 1000, 3000, 10000};
    std::vector<std::string> samplers = {"cf", "is", "mh", "chmc"};
    double T = 0.0;  // 0 selects T by pilot runs
};

struct NonlinearOptions {
    std::size_t n = 600;
    int seeds = 10;
    double T = 0.5;
    double radius = 0.5;
    std::size_t max_attempts = 100000000;
};

struct TimingOptions {
    std::vector<std::string> scenarios = {"genlog", "student"};
    std::vector<std::string> samplers = {"cf", "is", "mh", "chmc"};
    std::size_t n = 10000;
};

struct MseOptions {
    std::size_t n_gaussian = 100000;
    std::size_t n_other = 10000;
    std::vector<std::string> families = {"gaussian", "student", "genlog"};
};

struct ImputeCliOptions {
    // Synthetic data unless a data file is given.
    std::string data;
    std::string targets;
    int K = 7;
    int n = 600;
    int horizon = 24;
    int paths = 1000;
    double tau = 1.0;
    bool spread = false;
    std::string centre = "total";
};

Table run_toy(const ToyOptions& o, const Common& c);
Table run_compare(const CompareOptions& o, const Common& c);
Table run_nonlinear(const NonlinearOptions& o, const Common& c);
Table run_timing(const TimingOptions& o, const Common& c);
Table run_mse_table(const MseOptions& o, const Common& c);
Table run_impute(const ImputeCliOptions& o, const Common& c);

}  // namespace cfusion::cli
