#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cfusion/constraints.hpp"
#include "cfusion/gaussian_analysis.hpp"
#include "cfusion/stats.hpp"
#include "cfusion/vmf.hpp"

using namespace cfusion;

namespace {

LinearConstraint sum3(double c) {
    LinearConstraint k{Mat::Ones(1, 3), Vec::Constant(1, c)};
    return k;
}

// log of int_{sphere} N(y; x, T I) dS for the 2-sphere centred at 0.
double log_sphere_mass(const Vec& x, double T, double r) {
    const double a = x.norm();
    const int n = 20000;
    double s = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double w = -1.0 + 2.0 * k / n;
        const double q = (r * r + a * a - 2.0 * r * a * w) / (2.0 * T);
        s += ((k == 0 || k == n) ? 0.5 : 1.0) * std::exp(-q);
    }
    return std::log(s * 2.0 / n * 2.0 * std::numbers::pi * r * r);
}

}  // namespace

TEST(Linear, DrawsSatisfyTheConstraint) {
    Rng rng(1);
    const auto con = sum3(0.0);
    for (int i = 0; i < 1000; ++i) {
        const Vec y = sample_gaussian_linear(Vec::Zero(3), 1.0, con, rng);
        ASSERT_NEAR(y.sum(), 0.0, 1e-8);
    }
}

TEST(Linear, ConditionalMeanAndCovariance) {
    Rng rng(2);
    Vec var(3);
    var << 1.0, 2.0, 0.5;
    LinearConstraint con = sum3(4.0);
    GaussianLinearSampler s(con, var);
    Vec x(3);
    x << 1.0, 1.0, 1.0;
    const int n = 100000;
    Mat Y(n, 3);
    for (int i = 0; i < n; ++i) Y.row(i) = s.sample(x, 1.0, rng).transpose();
    const auto oracle = condition_on_sum(x, var, 4.0);
    const Vec m = Y.colwise().mean().transpose();
    const Mat C = (Y.rowwise() - m.transpose()).transpose() * (Y.rowwise() - m.transpose()) / (n - 1.0);
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(m[i], oracle.mu_star[i], 3.0 * std::sqrt(oracle.sigma_star(i, i) / n));
        for (int j = 0; j < 3; ++j) {
            const double se = std::sqrt((oracle.sigma_star(i, i) * oracle.sigma_star(j, j) +
                                         oracle.sigma_star(i, j) * oracle.sigma_star(i, j)) /
                                        n);
            EXPECT_NEAR(C(i, j), oracle.sigma_star(i, j), 4.0 * se);
        }
    }
}

TEST(Linear, UnitVarianceMeanExample) {
    Rng rng(3);
    const int n = 100000;
    Vec x = Vec::Ones(3);
    Vec acc = Vec::Zero(3);
    for (int i = 0; i < n; ++i) acc += sample_gaussian_linear(x, 1.0, sum3(0.0), rng);
    acc /= n;
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(acc[i], 0.0, 3.0 * std::sqrt((2.0 / 3.0) / n));
}

TEST(Linear, AgreesWithStripRejection) {
    Rng rng(4);
    LinearConstraint con{Mat::Ones(1, 2), Vec::Constant(1, 1.0)};
    Vec x(2);
    x << 0.3, -0.8;
    std::vector<double> oracle, ours;
    while (oracle.size() < 20000) {
        const double a = x[0] + rng.normal(), b = x[1] + rng.normal();
        if (std::abs(a + b - 1.0) < 1e-2) oracle.push_back(a);
    }
    for (int i = 0; i < 20000; ++i) ours.push_back(sample_gaussian_linear(x, 1.0, con, rng)[0]);
    EXPECT_GT(ks_two_sample(oracle, ours).p_value, 0.001);
}

TEST(Linear, AcceptanceWeightValues) {
    const auto con = sum3(0.0);
    EXPECT_NEAR(linear_acceptance_weight(Vec::Ones(3), 1.0, con), std::exp(-1.5), 1e-14);
    Vec on(3);
    on << 1.0, -3.0, 2.0;
    EXPECT_DOUBLE_EQ(linear_acceptance_weight(on, 0.7, con), 1.0);
    double prev = 1.0;
    for (double t = 0.1; t < 5.0; t += 0.1) {
        const double w = linear_acceptance_weight(Vec::Constant(3, t), 2.0, con);
        EXPECT_LT(w, prev);
        EXPECT_GT(w, 0.0);
        prev = w;
    }
}

TEST(Linear, RankDeficiencyRejected) {
    Mat A(2, 3);
    A << 1, 1, 1, 2, 2, 2;
    LinearConstraint con{A, Vec::Zero(2)};
    EXPECT_THROW(con.validate(), std::invalid_argument);
}

TEST(Linear, SumConstraintLayout) {
    Vec s(2);
    s << 1.0, -2.0;
    const auto con = sum_constraint(3, 2, s);
    ASSERT_EQ(con.A.rows(), 2);
    ASSERT_EQ(con.A.cols(), 6);
    Rng rng(5);
    const Vec y = sample_gaussian_linear(Vec::Zero(6), 1.0, con, rng);
    EXPECT_NEAR(y[0] + y[2] + y[4], 1.0, 1e-10);
    EXPECT_NEAR(y[1] + y[3] + y[5], -2.0, 1e-10);
}

TEST(Vmf, EndpointsLieOnTheSphere) {
    Rng rng(6);
    SphereConstraint sph{Vec::Constant(4, 1.0), 2.5};
    for (int i = 0; i < 2000; ++i) {
        Vec x(4);
        for (int j = 0; j < 4; ++j) x[j] = rng.normal(0.0, 3.0);
        const auto e = sample_vmf_endpoint(x, 0.7, sph, rng);
        ASSERT_NEAR((e.y - sph.center).norm(), 2.5, 1e-8 * 2.5);
        ASSERT_GT(e.weight, 0.0);
        ASSERT_LE(e.weight, 1.0);
    }
}

TEST(Vmf, DegenerateCentreRejected) {
    Rng rng(7);
    SphereConstraint sph{Vec::Zero(3), 1.0};
    EXPECT_THROW(sample_vmf_endpoint(Vec::Zero(3), 1.0, sph, rng), std::domain_error);
}

TEST(Vmf, ZeroConcentrationIsUniform) {
    Rng rng(8);
    SphereConstraint sph{Vec::Zero(3), 1.0};
    Vec x = Vec::Zero(3);
    x[0] = 1e-9;
    std::vector<double> v(20000);
    for (auto& z : v) z = sample_vmf_endpoint(x, 1.0, sph, rng).y[1];
    // <y, e> is uniform on [-1, 1] for the uniform law on the 2-sphere.
    EXPECT_GT(ks_one_sample(v, [](double z) { return std::clamp(0.5 * (z + 1.0), 0.0, 1.0); }).p_value, 0.001);
}

TEST(Vmf, CosineLawOnTwoSphere) {
    Rng rng(9);
    const double kappa = 2.0;
    Vec mu = Vec::Zero(3);
    mu[0] = 1.0;
    std::vector<double> v(20000);
    for (auto& z : v) z = sample_vmf_unit(mu, kappa, rng)[0];
    auto cdf = [&](double w) {
        w = std::clamp(w, -1.0, 1.0);
        return (std::exp(kappa * w) - std::exp(-kappa)) / (std::exp(kappa) - std::exp(-kappa));
    };
    EXPECT_GT(ks_one_sample(v, cdf).p_value, 0.001);
}

TEST(Vmf, MatchesThinShellRejection) {
    Rng rng(10);
    SphereConstraint sph{Vec::Zero(3), 1.0};
    Vec x = Vec::Zero(3);
    x[0] = 2.0;
    std::vector<double> oracle, ours;
    while (oracle.size() < 5000) {
        Vec y(3);
        for (int j = 0; j < 3; ++j) y[j] = x[j] + rng.normal();
        const double r = y.norm();
        if (std::abs(r - 1.0) < 1e-3) oracle.push_back(y[0] / r);
    }
    for (int i = 0; i < 5000; ++i) ours.push_back(sample_vmf_endpoint(x, 1.0, sph, rng).y[0]);
    EXPECT_GT(ks_two_sample(oracle, ours).p_value, 0.001);
}

TEST(Vmf, DensityIntegratesToOne) {
    Vec mu = Vec::Zero(3);
    mu[2] = 1.0;
    for (double kappa : {0.0, 0.5, 4.0, 30.0}) {
        // Surface element on the 2-sphere is 2 pi dw in the cosine to mu.
        const int n = 200000;
        double s = 0.0;
        for (int k = 0; k <= n; ++k) {
            const double w = -1.0 + 2.0 * k / n;
            Vec y(3);
            y << std::sqrt(std::max(0.0, 1.0 - w * w)), 0.0, w;
            s += ((k == 0 || k == n) ? 0.5 : 1.0) * std::exp(vmf_log_density(y, mu, kappa));
        }
        EXPECT_NEAR(s * 2.0 / n * 2.0 * std::numbers::pi, 1.0, 1e-6) << "kappa " << kappa;
    }
}

TEST(Vmf, LogMeanExpCosine) {
    // On the 2-sphere the mean of exp(k w) is sinh(k) / k.
    for (double k : {0.1, 1.0, 10.0, 50.0}) EXPECT_NEAR(log_mean_exp_cosine(3, k), std::log(std::sinh(k) / k), 1e-10 * std::max(1.0, k));
    EXPECT_NEAR(log_mean_exp_cosine(3, 2000.0), 2000.0 - std::log(4000.0), 1e-8);
    EXPECT_NEAR(log_mean_exp_cosine(5, 0.0), 0.0, 1e-15);
}

TEST(Vmf, WeightIsProportionalToSphereMass) {
    // Stage-one acceptance must be proportional to the Gaussian mass the
    // proposal puts on the sphere, so ratios across x are fixed.
    SphereConstraint sph{Vec::Zero(3), 1.3};
    const double T = 0.8;
    Vec x1(3), x2(3), x3(3);
    x1 << 0.5, 0.2, 0.0;
    x2 << 2.0, -1.0, 0.4;
    x3 << 0.0, 0.0, 4.0;
    const double l1 = sphere_log_acceptance_weight(x1, T, sph), l2 = sphere_log_acceptance_weight(x2, T, sph),
                 l3 = sphere_log_acceptance_weight(x3, T, sph);
    EXPECT_NEAR(l1 - l2, log_sphere_mass(x1, T, 1.3) - log_sphere_mass(x2, T, 1.3), 1e-6);
    EXPECT_NEAR(l3 - l2, log_sphere_mass(x3, T, 1.3) - log_sphere_mass(x2, T, 1.3), 1e-6);
    EXPECT_LE(std::max({l1, l2, l3}), 0.0);
}
