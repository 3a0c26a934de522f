#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cfusion {

// Random stream used throughout the library. One instance per thread.
class Rng {
public:
    using engine_type = std::mt19937_64;

    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

    // Independent stream for (master seed, index). Used for per-draw
    // substreams so batch output does not depend on scheduling.
    static Rng substream(std::uint64_t master, std::uint64_t index);

    // Uniform on the open interval (0, 1).
    double uniform();
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    double normal();
    double normal(double mean, double sd) { return mean + sd * normal(); }
    double exponential() { return -std::log(uniform()); }
    double gamma(double shape);
    // log of a Gamma(shape, 1) variate; stable for small shapes.
    double log_gamma_variate(double shape);
    double student_t(double nu);
    std::uint64_t poisson(double mean);
    std::uint64_t next() { return engine_(); }

    engine_type& engine() { return engine_; }

private:
    engine_type engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace cfusion
