#include "cfusion/scenarios.hpp"

#include <cmath>

namespace cfusion {

namespace {

std::vector<DensityPtr> as_densities(const std::vector<UnivariatePtr>& comps) {
    return {comps.begin(), comps.end()};
}

// Orthonormal basis of {sum x = 0} in R^3.
const Vec& plane_e1() {
    static const Vec e = (Vec(3) << 1.0, -1.0, 0.0).finished() / std::sqrt(2.0);
    return e;
}
const Vec& plane_e2() {
    static const Vec e = (Vec(3) << 1.0, 1.0, -2.0).finished() / std::sqrt(6.0);
    return e;
}
constexpr double kCircleR2 = 24.0;

}  // namespace

FusionProblem sum_problem(const std::vector<UnivariatePtr>& comps, double s, double T) {
    return {as_densities(comps), sum_constraint(static_cast<int>(comps.size()), 1, Vec::Constant(1, s)), T};
}

FusionProblem toy_problem(double T) {
    return sum_problem({std::make_shared<StudentTDensity>(StudentTParams{0.0, 1.0, 3.0}),
                        std::make_shared<StudentTDensity>(StudentTParams{0.0, 1.0, 5.0})},
                       0.0, T);
}

double toy_log_density(double x) {
    return -2.0 * std::log1p(x * x / 3.0) - 3.0 * std::log1p(x * x / 5.0);
}

std::vector<UnivariatePtr> genlog_components() {
    return {std::make_shared<GenLogDensity>(GenLogParams{3.0, 0.4, 2.0, -5.0}),
            std::make_shared<GenLogDensity>(GenLogParams{3.0, 0.4, 1.0, -2.0}),
            std::make_shared<GenLogDensity>(GenLogParams{3.0, 0.4, 1.0, -3.0})};
}

std::vector<UnivariatePtr> student_components() {
    return {std::make_shared<StudentTDensity>(StudentTParams{-2.0, 1.0, 2.01}),
            std::make_shared<StudentTDensity>(StudentTParams{3.0, 1.0, 2.01}),
            std::make_shared<StudentTDensity>(StudentTParams{5.0, 1.0, 2.01})};
}

std::vector<UnivariatePtr> gaussian_components() {
    return {std::make_shared<NormalDensity>(0.0, 1.0), std::make_shared<NormalDensity>(0.0, 1.0),
            std::make_shared<NormalDensity>(0.0, 1.0)};
}

std::vector<UnivariatePtr> nonlinear_components() {
    return {std::make_shared<StudentTDensity>(StudentTParams{0.0, 0.6, 9.0}),
            std::make_shared<StudentTDensity>(StudentTParams{0.0, 0.6, 9.0}),
            std::make_shared<StudentTDensity>(StudentTParams{0.0, 4.0, 3.0})};
}

GeneralConstraint nonlinear_constraint() {
    GeneralConstraint g;
    g.h = [](const Vec& x) {
        Vec r(2);
        r << x.sum(), x.squaredNorm() / 3.0 - 8.0;
        return r;
    };
    g.jacobian = [](const Vec& x) {
        Mat J(2, 3);
        J.row(0).setOnes();
        J.row(1) = 2.0 * x.transpose() / 3.0;
        return J;
    };
    g.distance_lower_bound = [](const Vec& x) {
        const double m = x.mean();
        const Vec p = x.array() - m;
        const double radial = p.norm() - std::sqrt(kCircleR2);
        return std::sqrt(3.0 * m * m + radial * radial);
    };
    g.uniform_sampler = [](Rng& rng) -> Vec {
        const double a = 2.0 * M_PI * rng.uniform();
        return std::sqrt(kCircleR2) * (std::cos(a) * plane_e1() + std::sin(a) * plane_e2());
    };
    return g;
}

FusionProblem nonlinear_problem(double T) {
    return {as_densities(nonlinear_components()), nonlinear_constraint(), T};
}

std::vector<Vec> nonlinear_modes() {
    const auto comps = nonlinear_components();
    const auto point = [](double a) {
        return Vec(std::sqrt(kCircleR2) * (std::cos(a) * plane_e1() + std::sin(a) * plane_e2()));
    };
    const auto logf = [&](double a) {
        const Vec y = point(a);
        double s = 0.0;
        for (int i = 0; i < 3; ++i) s += comps[static_cast<std::size_t>(i)]->log_density1(y[i]);
        return s;
    };
    constexpr int n = 7200;
    const double h = 2.0 * M_PI / n;
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = logf(i * h);
    std::vector<Vec> modes;
    for (int i = 0; i < n; ++i) {
        const double l = v[static_cast<std::size_t>((i + n - 1) % n)];
        const double r = v[static_cast<std::size_t>((i + 1) % n)];
        const double c = v[static_cast<std::size_t>(i)];
        if (!(c > l && c >= r)) continue;
        // Golden-section refinement on [a - h, a + h].
        double lo = (i - 1) * h, hi = (i + 1) * h;
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        for (int it = 0; it < 100; ++it) {
            const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
            if (logf(m1) < logf(m2)) lo = m1; else hi = m2;
        }
        modes.push_back(point(0.5 * (lo + hi)));
    }
    return modes;
}

}  // namespace cfusion
