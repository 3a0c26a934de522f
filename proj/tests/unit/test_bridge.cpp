#include <gtest/gtest.h>

#include <cmath>

#include "cfusion/bridge.hpp"
#include "cfusion/series.hpp"
#include "cfusion/stats.hpp"
#include "oracles.hpp"

using namespace cfusion;
using cfusion::testing::bernoulli_se;

namespace {

double normal_cdf(double x, double mu, double sd) { return 0.5 * std::erfc(-(x - mu) / (sd * std::sqrt(2.0))); }

}  // namespace

TEST(Series, BoundsShrinkAndBracket) {
    for (auto s : {AlternatingSeries::bridge_noexit(1.0, 0.0, 0.0, 1.0), AlternatingSeries::bridge_noexit(2.0, 0.3, -0.5, 1.2),
                   AlternatingSeries::bessel_noexit(1.0, 0.5, 0.5, 1.0), AlternatingSeries::bessel_noexit_from_zero(1.0, 0.4, 1.5)}) {
        ProbabilityBounds prev{-1.0, 2.0};
        for (int n = 0; n < 40; ++n) {
            const ProbabilityBounds b = s.next();
            ASSERT_LE(b.lower, b.upper);
            ASSERT_GE(b.lower, prev.lower - 1e-15);
            ASSERT_LE(b.upper, prev.upper + 1e-15);
            if (n >= 3) {
                ASSERT_GE(b.lower, -1e-12);
                ASSERT_LE(b.upper, 1.0 + 1e-12);
            }
            prev = b;
        }
        EXPECT_LT(prev.width(), 1e-12);
    }
}

TEST(Series, OneBarrierLimit) {
    // With the lower barrier far away the two-sided law reduces to the
    // reflection formula for one barrier.
    const double T = 1.3, x = 0.2, y = 0.5, hi = 1.1;
    EXPECT_NEAR(noexit_probability(T, x, y, -50.0, hi), 1.0 - std::exp(-2.0 * (hi - x) * (hi - y) / T), 1e-12);
}

TEST(Series, NoexitSymmetries) {
    const double T = 0.8, x = 0.3, y = -0.4, lo = -1.0, hi = 0.9;
    const double p = noexit_probability(T, x, y, lo, hi);
    EXPECT_NEAR(noexit_probability(T, y, x, lo, hi), p, 1e-13);
    EXPECT_NEAR(noexit_probability(T, -x, -y, -hi, -lo), p, 1e-13);
    EXPECT_NEAR(noexit_probability(T, x + 5.0, y + 5.0, lo + 5.0, hi + 5.0), p, 1e-13);
}

TEST(Series, MaxSurvivalClosedForm) {
    const double T = 2.0, x = 0.1, y = 0.7;
    for (double m : {0.7, 1.0, 2.5}) EXPECT_NEAR(bridge_max_survival(T, x, y, m), std::exp(-2.0 * (m - x) * (m - y) / T), 1e-14);
    EXPECT_DOUBLE_EQ(bridge_max_survival(T, x, y, 0.5), 1.0);
}

TEST(Series, RetrospectiveBernoulliIsExact) {
    Rng rng(3);
    auto series = [] { return AlternatingSeries::bridge_noexit(1.0, 0.0, 0.0, 1.0); };
    const double p = series().evaluate();
    const int n = 100000;
    int hits = 0;
    for (int i = 0; i < n; ++i) {
        auto s = series();
        hits += retrospective_bernoulli(rng, s);
    }
    const auto f = bernoulli_se(static_cast<std::size_t>(hits), n);
    EXPECT_NEAR(f.mean, p, 4.0 * std::sqrt(p * (1 - p) / n));
}

TEST(Interpolate, MidpointVariance) {
    Rng rng(1);
    std::vector<double> v(100000);
    for (auto& x : v) {
        BridgeSkeleton s(1.0, 0.0, 0.0);
        x = bridge_interpolate(s, 0.5, rng);
    }
    EXPECT_NEAR(mean(v), 0.0, 4.0 * 0.5 / std::sqrt(1e5));
    EXPECT_NEAR(variance(v), 0.25, 4.0 * 0.25 * std::sqrt(2.0 / 1e5));
    EXPECT_GT(ks_one_sample(v, [](double x) { return normal_cdf(x, 0.0, 0.5); }).p_value, 0.001);
}

TEST(Interpolate, LinearMean) {
    Rng rng(2);
    std::vector<double> v(100000);
    for (auto& x : v) {
        BridgeSkeleton s(2.0, 0.0, 2.0);
        x = bridge_interpolate(s, 1.0, rng);
    }
    EXPECT_NEAR(mean(v), 1.0, 4.0 * std::sqrt(0.5 / 1e5));
}

TEST(Interpolate, RevealedTimesAreOrderedAndRecorded) {
    Rng rng(4);
    BridgeSkeleton s(1.0, 0.0, 1.0);
    for (double t : {0.7, 0.2, 0.5, 0.9}) bridge_interpolate(s, t, rng);
    const auto r = s.revealed();
    ASSERT_EQ(r.size(), 4u);
    for (std::size_t i = 1; i < r.size(); ++i) EXPECT_LT(r[i - 1].first, r[i].first);
    EXPECT_TRUE(s.value_at(0.5).has_value());
    EXPECT_FALSE(s.value_at(0.4).has_value());
}

TEST(Interpolate, JointLawIndependentOfRevealOrder) {
    const double T = 1.0, t1 = 0.3, t2 = 0.7;
    const int n = 100000;
    for (bool forward : {true, false}) {
        Rng rng(forward ? 5 : 6);
        std::vector<double> a(n), b(n);
        for (int i = 0; i < n; ++i) {
            BridgeSkeleton s(T, 0.0, 0.0);
            if (forward) {
                a[i] = bridge_interpolate(s, t1, rng);
                b[i] = bridge_interpolate(s, t2, rng);
            } else {
                b[i] = bridge_interpolate(s, t2, rng);
                a[i] = bridge_interpolate(s, t1, rng);
            }
        }
        double c = 0.0;
        for (int i = 0; i < n; ++i) c += a[i] * b[i];
        c /= n;
        const double va = t1 * (T - t1) / T, vb = t2 * (T - t2) / T, cab = t1 * (T - t2) / T;
        EXPECT_NEAR(variance(a), va, 4.0 * va * std::sqrt(2.0 / n));
        EXPECT_NEAR(variance(b), vb, 4.0 * vb * std::sqrt(2.0 / n));
        EXPECT_NEAR(c, cab, 4.0 * std::sqrt((va * vb + cab * cab) / n));
    }
}

TEST(Interpolate, LayeredDrawsStayInLayer) {
    Rng rng(7);
    for (int i = 0; i < 100000; ++i) {
        BridgeSkeleton s(1.0, 0.0, 2.0, Layer{-1.0, 3.0});
        const double v = bridge_interpolate(s, 0.5, rng);
        ASSERT_GE(v, -1.0);
        ASSERT_LE(v, 3.0);
    }
}

TEST(Crossing, HugeIntervalAlwaysStays) {
    Rng rng(8);
    int hits = 0;
    for (int i = 0; i < 10000; ++i) hits += crossing_event(1.0, 0.0, 0.0, 1000.0, rng);
    EXPECT_GE(hits, 9990);
}

TEST(Crossing, TimeReversalSymmetry) {
    Rng rng(9);
    const int n = 100000;
    int a = 0, b = 0;
    for (int i = 0; i < n; ++i) {
        a += crossing_event(2.0, 0.3, -0.5, 1.2, rng);
        b += crossing_event(2.0, -0.5, 0.3, 1.2, rng);
    }
    const auto fa = bernoulli_se(static_cast<std::size_t>(a), n), fb = bernoulli_se(static_cast<std::size_t>(b), n);
    EXPECT_TRUE(cfusion::testing::agree(fa, fb, 3.0));
    const double p = noexit_probability(2.0, 0.3, -0.5, -1.2, 1.2);
    EXPECT_NEAR(fa.mean, p, 4.0 * fa.se);
}

TEST(Layers, SequenceIsIncreasing) {
    LayerSequence a({0.0, 0.5, 1.5});
    EXPECT_DOUBLE_EQ(a(0), 0.0);
    EXPECT_DOUBLE_EQ(a(2), 1.5);
    EXPECT_DOUBLE_EQ(a(4), 3.5);
    const auto h = LayerSequence::for_horizon(4.0, 0.5);
    for (int i = 1; i < 10; ++i) EXPECT_NEAR(h(i) - h(i - 1), 1.0, 1e-15);
}

TEST(Layers, FirstHugeLayerAlmostSure) {
    Rng rng(10);
    LayerSequence a(1000.0);
    int ones = 0;
    for (int i = 0; i < 10000; ++i) ones += sample_layer(1.0, 0.0, 0.0, a, rng) == 1;
    EXPECT_GE(ones, 9990);
}

TEST(Layers, DistributionMatchesNoexitProbabilities) {
    Rng rng(11);
    const double T = 1.0, x = 0.2, y = -0.3;
    LayerSequence a(0.5);
    const int n = 100000;
    std::vector<int> count(8, 0);
    for (int i = 0; i < n; ++i) {
        const int I = sample_layer(T, x, y, a, rng);
        ASSERT_GE(I, 1);
        ++count[static_cast<std::size_t>(std::min(I, 7))];
    }
    double prev = 0.0;
    std::vector<double> obs, expct;
    double cum_obs = 0.0;
    for (int i = 1; i < 7; ++i) {
        const double cdf = noexit_probability(T, x, y, std::min(x, y) - a(i), std::max(x, y) + a(i));
        ASSERT_GE(cdf, prev - 1e-14);
        if (cdf - prev > 1e-6) {
            obs.push_back(count[static_cast<std::size_t>(i)]);
            expct.push_back(n * (cdf - prev));
            cum_obs += count[static_cast<std::size_t>(i)];
        }
        prev = cdf;
    }
    obs.push_back(n - cum_obs);
    expct.push_back(n * (1.0 - prev));
    EXPECT_GT(chi_square(obs, expct).p_value, 0.001);
}

TEST(Extremum, ValueInLayerBandAndBoundsLaterDraws) {
    Rng rng(12);
    LayerSequence a(0.5);
    const double T = 1.0, x = 0.1, y = 0.4;
    for (int rep = 0; rep < 5000; ++rep) {
        BridgeSkeleton s(T, x, y);
        const int I = sample_layer(T, x, y, a, rng);
        sample_extremum_and_decompose(s, I, a, rng);
        ASSERT_TRUE(s.extremum().has_value());
        const Extremum e = *s.extremum();
        ASSERT_GT(e.time, 0.0);
        ASSERT_LT(e.time, T);
        if (e.kind == ExtremumKind::max) {
            ASSERT_GE(e.value, std::max(x, y) + a(I - 1) - 1e-12);
            ASSERT_LE(e.value, std::max(x, y) + a(I) + 1e-12);
        } else {
            ASSERT_LE(e.value, std::min(x, y) - a(I - 1) + 1e-12);
            ASSERT_GE(e.value, std::min(x, y) - a(I) - 1e-12);
        }
        for (double t : {0.1, 0.35, 0.6, 0.95}) {
            if (std::abs(t - e.time) < 1e-12) continue;
            const double v = bridge_interpolate(s, t, rng);
            if (e.kind == ExtremumKind::max) {
                ASSERT_LE(v, e.value + 1e-12);
            } else {
                ASSERT_GE(v, e.value - 1e-12);
            }
            ASSERT_LE(v, std::max(x, y) + a(I) + 1e-12);
            ASSERT_GE(v, std::min(x, y) - a(I) - 1e-12);
        }
    }
}

TEST(Extremum, MarginalRecoversPlainBridge) {
    Rng rng(13);
    LayerSequence a(0.5);
    const double T = 1.0, x = 0.0, y = 0.6;
    std::vector<double> v(20000);
    for (auto& m : v) {
        BridgeSkeleton s(T, x, y);
        sample_extremum_and_decompose(s, sample_layer(T, x, y, a, rng), a, rng);
        m = bridge_interpolate(s, 0.5 * T, rng);
    }
    const double p = ks_one_sample(v, [&](double z) { return normal_cdf(z, 0.5 * (x + y), 0.5); }).p_value;
    EXPECT_GT(p, 0.001);
}

TEST(Bessel, HugeBoundAlmostSure) {
    Rng rng(14);
    int hits = 0;
    for (int i = 0; i < 10000; ++i) hits += bessel_noleave_event(1.0, 0.5, 0.5, 1000.0, std::nullopt, rng);
    EXPECT_GE(hits, 9990);
}

TEST(Bessel, OuterConditioningRaisesProbability) {
    Rng rng(15);
    const int n = 50000;
    int plain = 0, outer = 0;
    for (int i = 0; i < n; ++i) {
        plain += bessel_noleave_event(1.0, 0.5, 0.3, 1.0, std::nullopt, rng);
        outer += bessel_noleave_event(1.0, 0.5, 0.3, 1.0, 1.5, rng);
    }
    const auto fp = bernoulli_se(static_cast<std::size_t>(plain), n), fo = bernoulli_se(static_cast<std::size_t>(outer), n);
    EXPECT_GT(fo.mean, fp.mean);
    EXPECT_NEAR(fp.mean, bessel_noleave_probability(1.0, 0.5, 0.3, 1.0), 4.0 * fp.se);
    const double q_ratio = bessel_noleave_probability(1.0, 0.5, 0.3, 1.0) / bessel_noleave_probability(1.0, 0.5, 0.3, 1.5);
    EXPECT_NEAR(fo.mean, q_ratio, 4.0 * fo.se);
}

TEST(Bessel, ProbabilityIncreasesWithBound) {
    double prev = 0.0;
    for (double K : {0.6, 0.8, 1.0, 1.5, 3.0}) {
        const double q = bessel_noleave_probability(1.0, 0.5, 0.5, K);
        EXPECT_GE(q, prev);
        EXPECT_LE(q, 1.0);
        prev = q;
    }
}
