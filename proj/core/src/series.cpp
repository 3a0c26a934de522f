#include "cfusion/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cfusion {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double AlternatingSeries::Family::log_abs(int j) const {
    const double jd = static_cast<double>(j);
    double v = -(c2 * jd * jd + c1 * jd + c0);
    if (linear) v += std::log(l1 * jd + l0);
    return v;
}

void AlternatingSeries::add_family(const Family& f) {
    if (nfam_ == static_cast<int>(fam_.size())) {
        throw std::logic_error("AlternatingSeries: too many term families");
    }
    fam_[nfam_++] = f;
}

ProbabilityBounds AlternatingSeries::next() {
    ++n_;
    double tail = 0.0;
    for (int f = 0; f < nfam_; ++f) {
        const Family& fa = fam_[f];
        partial_ += fa.sign * std::exp(fa.log_abs(n_));
        const double l1 = fa.log_abs(n_ + 1);
        const double l2 = fa.log_abs(n_ + 2);
        const double rho = std::exp(l2 - l1);
        if (!(rho < 1.0)) {
            tail = kInf;
        } else if (tail < kInf) {
            tail += std::exp(l1) / (1.0 - rho);
        }
    }
    const double s = base_ + partial_;
    double lo = (s - tail) / divisor_;
    double hi = (s + tail) / divisor_;
    lo = std::max({lo, 0.0, bounds_.lower});
    hi = std::min({hi, 1.0, bounds_.upper});
    if (lo > hi) {
        // Round-off at the converged value; collapse onto the midpoint.
        const double mid = 0.5 * (lo + hi);
        lo = hi = mid;
    }
    bounds_ = {lo, hi};
    return bounds_;
}

double AlternatingSeries::evaluate(double tol) {
    for (int n = 0; n < kSeriesTermCap; ++n) {
        const ProbabilityBounds b = next();
        if (b.width() <= tol) return 0.5 * (b.lower + b.upper);
    }
    throw SeriesNonConvergence("AlternatingSeries::evaluate: no convergence");
}

AlternatingSeries AlternatingSeries::constant(double p) {
    AlternatingSeries s(p, 1.0);
    s.bounds_ = {p, p};
    return s;
}

AlternatingSeries AlternatingSeries::bridge_noexit(double T, double x, double y, double K) {
    if (!(std::abs(x) < K) || !(std::abs(y) < K)) return constant(0.0);
    AlternatingSeries s(1.0, 1.0);
    const double k2 = 8.0 * K * K / T;
    // sigma_j(x, y) and sigma_j(-x, -y)
    for (double sgn : {1.0, -1.0}) {
        const double A = K + sgn * x;
        const double B = K + sgn * y;
        Family f;
        f.sign = -1.0;
        f.c2 = k2;
        f.c1 = -4.0 * K * (A + B) / T;
        f.c0 = 2.0 * A * B / T;
        s.add_family(f);
    }
    // tau_j(x, y) and tau_j(-x, -y)
    for (double sgn : {1.0, -1.0}) {
        Family f;
        f.sign = 1.0;
        f.c2 = k2;
        f.c1 = sgn * 4.0 * K * (x - y) / T;
        f.c0 = 0.0;
        s.add_family(f);
    }
    return s;
}

AlternatingSeries AlternatingSeries::bessel_noexit_from_zero(double T, double y, double K) {
    if (!(y > 0.0)) throw std::invalid_argument("bessel_noexit_from_zero: y must be positive");
    if (!(y < K)) return constant(0.0);
    AlternatingSeries s(1.0, 1.0);
    // -(1/y) zeta_j and +(1/y) xi_j
    Family zeta;
    zeta.sign = -1.0;
    zeta.c2 = 2.0 * K * K / T;
    zeta.c1 = -2.0 * K * y / T;
    zeta.linear = true;
    zeta.l1 = 2.0 * K / y;
    zeta.l0 = -1.0;
    s.add_family(zeta);
    Family xi = zeta;
    xi.sign = 1.0;
    xi.c1 = 2.0 * K * y / T;
    xi.l0 = 1.0;
    s.add_family(xi);
    return s;
}

AlternatingSeries AlternatingSeries::bessel_noexit(double T, double a, double b, double K) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("bessel_noexit: endpoints must be positive");
    if (!(a < K) || !(b < K)) return constant(0.0);
    // Brownian bridge in (0, K) divided by its probability of staying positive.
    const double half = 0.5 * K;
    AlternatingSeries s = bridge_noexit(T, a - half, b - half, half);
    s.divisor_ = -std::expm1(-2.0 * a * b / T);
    return s;
}

bool retrospective_ratio_bernoulli(Rng& rng, AlternatingSeries& num, AlternatingSeries& den) {
    return retrospective_bernoulli(rng, [&] {
        const ProbabilityBounds n = num.next();
        const ProbabilityBounds d = den.next();
        ProbabilityBounds r{0.0, 1.0};
        if (d.upper > 0.0) r.lower = std::min(1.0, n.lower / d.upper);
        if (d.lower > 0.0) r.upper = std::min(1.0, n.upper / d.lower);
        return r;
    });
}

}  // namespace cfusion
