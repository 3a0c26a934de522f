#include "cfusion/rng.hpp"

#include <cmath>

namespace cfusion {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    engine_.seed(seq);
}

Rng Rng::substream(std::uint64_t master, std::uint64_t index) {
    std::uint64_t a = splitmix64(master);
    std::uint64_t b = splitmix64(a ^ splitmix64(index + 0x632be59bd9b4e019ULL));
    Rng r(0);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    r.engine_.seed(seq);
    return r;
}

double Rng::uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() { return normal_(engine_); }

double Rng::gamma(double shape) {
    std::gamma_distribution<double> g(shape, 1.0);
    return g(engine_);
}

double Rng::log_gamma_variate(double shape) {
    if (shape >= 1.0) return std::log(gamma(shape));
    // G(a) = G(a + 1) * U^(1/a)
    return std::log(gamma(shape + 1.0)) + std::log(uniform()) / shape;
}

double Rng::student_t(double nu) {
    double z = normal();
    double v = 2.0 * gamma(0.5 * nu);
    return z / std::sqrt(v / nu);
}

std::uint64_t Rng::poisson(double mean) {
    if (mean <= 0.0) return 0;
    std::poisson_distribution<std::uint64_t> p(mean);
    return p(engine_);
}

}  // namespace cfusion
