#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

#include "cfusion/rng.hpp"

namespace cfusion {

struct ProbabilityBounds {
    double lower = 0.0;
    double upper = 1.0;
    double width() const { return upper - lower; }
};

class SeriesNonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kSeriesTermCap = 10000;

// A probability written as
//   (base + sum_f sum_{j>=1} sign_f * (l1_f j + l0_f) * exp(-(c2_f j^2 + c1_f j + c0_f))) / divisor
// where every family has log-concave magnitude in j, so the tail after n
// terms is dominated by a geometric series in the ratio of terms n+2 and n+1.
// next() adds one term per family and returns bounds that only ever shrink.
class AlternatingSeries {
public:
    struct Family {
        double sign = 1.0;
        double c2 = 0.0, c1 = 0.0, c0 = 0.0;
        bool linear = false;
        double l1 = 0.0, l0 = 1.0;
        double log_abs(int j) const;
    };

    AlternatingSeries() = default;
    AlternatingSeries(double base, double divisor = 1.0) : base_(base), divisor_(divisor) {}

    void add_family(const Family& f);
    ProbabilityBounds next();
    ProbabilityBounds current() const { return bounds_; }
    int terms() const { return n_; }
    // Refine until the width drops below tol (or the cap is hit).
    double evaluate(double tol = 1e-14);

    // Brownian bridge from x to y over [0, T] stays inside (-K, K).
    static AlternatingSeries bridge_noexit(double T, double x, double y, double K);
    // Bessel-3 bridge from 0 to y over [0, T] stays below K.
    static AlternatingSeries bessel_noexit_from_zero(double T, double y, double K);
    // Bessel-3 bridge from a > 0 to b > 0 over [0, T] stays below K.
    static AlternatingSeries bessel_noexit(double T, double a, double b, double K);
    // Probability identically zero or one.
    static AlternatingSeries constant(double p);

private:
    std::array<Family, 4> fam_{};
    int nfam_ = 0;
    double base_ = 1.0;
    double divisor_ = 1.0;
    double partial_ = 0.0;
    int n_ = 0;
    ProbabilityBounds bounds_{0.0, 1.0};
};

// Draws a Bernoulli(p) event where p is only available through refining
// bounds. Throws SeriesNonConvergence past kSeriesTermCap refinements.
template <class BoundsFn>
bool retrospective_bernoulli(Rng& rng, BoundsFn&& next_bounds) {
    const double u = rng.uniform();
    for (int n = 0; n < kSeriesTermCap; ++n) {
        const ProbabilityBounds b = next_bounds();
        if (u < b.lower) return true;
        if (u >= b.upper) return false;
    }
    throw SeriesNonConvergence("retrospective_bernoulli: bounds failed to separate the uniform");
}

inline bool retrospective_bernoulli(Rng& rng, AlternatingSeries& s) {
    return retrospective_bernoulli(rng, [&] { return s.next(); });
}

// Bernoulli with probability num / den for two series, via interval division.
bool retrospective_ratio_bernoulli(Rng& rng, AlternatingSeries& num, AlternatingSeries& den);

}  // namespace cfusion
