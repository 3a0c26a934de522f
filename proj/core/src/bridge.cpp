#include "cfusion/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cfusion {

namespace {

constexpr double kTinyDistance = 1e-300;
constexpr int kRejectionCap = 1000000;

// Bessel-3 bridge from a to b over [0, dt] stays below K.
AlternatingSeries bessel_series(double dt, double a, double b, double K) {
    if (!(a < K) || !(b < K)) return AlternatingSeries::constant(0.0);
    if (a <= 0.0 && b <= 0.0) {
        return AlternatingSeries::bessel_noexit_from_zero(dt, kTinyDistance, K);
    }
    if (a <= 0.0) return AlternatingSeries::bessel_noexit_from_zero(dt, b, K);
    if (b <= 0.0) return AlternatingSeries::bessel_noexit_from_zero(dt, a, K);
    return AlternatingSeries::bessel_noexit(dt, a, b, K);
}

AlternatingSeries interval_series(double T, double x, double y, double lower, double upper) {
    const double c = 0.5 * (lower + upper);
    const double K = 0.5 * (upper - lower);
    return AlternatingSeries::bridge_noexit(T, x - c, y - c, K);
}

double gaussian_bridge_draw(double t0, double v0, double t1, double v1, double t, Rng& rng) {
    const double w = (t - t0) / (t1 - t0);
    const double var = (t - t0) * (t1 - t) / (t1 - t0);
    return v0 + w * (v1 - v0) + std::sqrt(std::max(var, 0.0)) * rng.normal();
}

// Norm of a 3-d Brownian bridge from (a, 0, 0) to a point of radius b whose
// direction is drawn from the matching von Mises-Fisher law.
double bessel_bridge_draw(double t0, double a, double t1, double b, double t, Rng& rng) {
    const double dt = t1 - t0;
    const double kappa = a * b / dt;
    const double u = rng.uniform();
    double w;
    if (kappa < 1e-12) {
        w = 2.0 * u - 1.0;
    } else {
        w = 1.0 + std::log1p(-(1.0 - u) * -std::expm1(-2.0 * kappa)) / kappa;
        w = std::clamp(w, -1.0, 1.0);
    }
    const double sw = std::sqrt(std::max(0.0, 1.0 - w * w));
    const double ang = 2.0 * M_PI * rng.uniform();
    const double end[3] = {b * w, b * sw * std::cos(ang), b * sw * std::sin(ang)};
    const double start[3] = {a, 0.0, 0.0};
    const double frac = (t - t0) / dt;
    const double sd = std::sqrt(std::max(0.0, (t - t0) * (t1 - t) / dt));
    double r2 = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double c = start[k] + frac * (end[k] - start[k]) + sd * rng.normal();
        r2 += c * c;
    }
    return std::sqrt(r2);
}

double inverse_gaussian(double mu, double lambda, Rng& rng) {
    const double z = rng.normal();
    const double r = mu * z * z / (2.0 * lambda);
    const double x = mu / (1.0 + r + std::sqrt(r * r + 2.0 * r));
    if (rng.uniform() <= mu / (mu + x)) return x;
    return mu * mu / x;
}

// Time of the maximum M of a bridge x -> y over [0, T].
double argmax_time(double T, double x, double y, double M, Rng& rng) {
    const double A = std::max((M - x) * (M - x) / (2.0 * T), kTinyDistance);
    const double B = std::max((M - y) * (M - y) / (2.0 * T), kTinyDistance);
    const double r = std::sqrt(B / A);
    double V;
    if (rng.uniform() < 1.0 / (1.0 + r)) {
        V = inverse_gaussian(r, 2.0 * B, rng);
    } else {
        V = 1.0 / inverse_gaussian(1.0 / r, 2.0 * A, rng);
    }
    return T / (1.0 + V);
}

// Maximum of a bridge x -> y over [0, T] conditioned to lie in (m1, m2].
double bounded_max(double T, double x, double y, double m1, double m2, Rng& rng) {
    const auto logG = [&](double m) { return -2.0 * (m - x) * (m - y) / T; };
    const double lg1 = logG(m1);
    const double lg2 = std::isfinite(m2) ? logG(m2) : -INFINITY;
    // log U with U uniform on (G(m2), G(m1))
    const double v = rng.uniform();
    const double logU = lg1 + std::log1p(-v * -std::expm1(lg2 - lg1));
    const double d = x - y;
    return 0.5 * ((x + y) + std::sqrt(d * d - 2.0 * T * logU));
}

}  // namespace

LayerSequence::LayerSequence(double spacing) : a_{0.0}, step_(spacing) {
    if (!(spacing > 0.0)) throw std::invalid_argument("LayerSequence: spacing must be positive");
}

LayerSequence::LayerSequence(std::vector<double> a) : a_(std::move(a)) {
    if (a_.size() < 2 || a_.front() != 0.0) {
        throw std::invalid_argument("LayerSequence: need a_0 = 0 and at least one positive level");
    }
    for (std::size_t i = 1; i < a_.size(); ++i) {
        if (!(a_[i] > a_[i - 1])) throw std::invalid_argument("LayerSequence: levels must increase");
    }
    step_ = a_.back() - a_[a_.size() - 2];
}

LayerSequence LayerSequence::for_horizon(double T, double c) {
    if (!(T > 0.0) || !(c > 0.0)) throw std::invalid_argument("LayerSequence: T and c must be positive");
    return LayerSequence(c * std::sqrt(T));
}

double LayerSequence::operator()(int i) const {
    if (i < 0) throw std::out_of_range("LayerSequence: negative index");
    const auto n = static_cast<int>(a_.size());
    if (i < n) return a_[i];
    return a_.back() + (i - n + 1) * step_;
}

BridgeSkeleton::BridgeSkeleton(double T, double x, double y) : T_(T) {
    if (!(T > 0.0)) throw std::invalid_argument("BridgeSkeleton: horizon must be positive");
    knots_ = {{0.0, x}, {T, y}};
    segs_.resize(1);
}

BridgeSkeleton::BridgeSkeleton(double T, double x, double y, Layer layer) : BridgeSkeleton(T, x, y) {
    if (!(layer.lower < layer.upper) || x < layer.lower || x > layer.upper || y < layer.lower ||
        y > layer.upper) {
        throw std::invalid_argument("BridgeSkeleton: endpoints must lie inside the layer");
    }
    layer_ = layer;
}

std::vector<std::pair<double, double>> BridgeSkeleton::revealed() const {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 1; i + 1 < knots_.size(); ++i) {
        if (extremum_ && knots_[i].t == extremum_->time) continue;
        out.emplace_back(knots_[i].t, knots_[i].v);
    }
    return out;
}

std::size_t BridgeSkeleton::revealed_count() const {
    return knots_.size() - 2 - (extremum_ ? 1 : 0);
}

std::optional<double> BridgeSkeleton::value_at(double t) const {
    auto it = std::lower_bound(knots_.begin(), knots_.end(), t,
                               [](const Knot& k, double s) { return k.t < s; });
    if (it != knots_.end() && it->t == t) return it->v;
    return std::nullopt;
}

double BridgeSkeleton::distance(double v) const {
    return extremum_->kind == ExtremumKind::max ? extremum_->value - v : v - extremum_->value;
}

double BridgeSkeleton::from_distance(double d) const {
    return extremum_->kind == ExtremumKind::max ? extremum_->value - d : extremum_->value + d;
}

double bridge_interpolate(BridgeSkeleton& s, double t, Rng& rng) {
    if (!(t > 0.0) || !(t < s.T_)) throw std::invalid_argument("bridge_interpolate: t outside (0, T)");
    auto it = std::lower_bound(s.knots_.begin(), s.knots_.end(), t,
                               [](const BridgeSkeleton::Knot& k, double u) { return k.t < u; });
    if (it->t == t) return it->v;
    const std::size_t j = static_cast<std::size_t>(it - s.knots_.begin());
    const BridgeSkeleton::Knot k0 = s.knots_[j - 1];
    const BridgeSkeleton::Knot k1 = s.knots_[j];
    const BridgeSkeleton::Segment seg = s.segs_[j - 1];
    BridgeSkeleton::Segment left = seg, right = seg;
    double v = 0.0;

    if (s.extremum_) {
        const double d0 = s.distance(k0.v);
        const double d1 = s.distance(k1.v);
        const double hi = seg.within;
        int tries = 0;
        for (;; ++tries) {
            if (tries == kRejectionCap) throw std::runtime_error("bridge_interpolate: rejection cap reached");
            const double w = bessel_bridge_draw(k0.t, d0, k1.t, d1, t, rng);
            if (std::isfinite(hi)) {
                if (w >= hi) continue;
                if (!bessel_noleave_event(t - k0.t, d0, w, hi, std::nullopt, rng)) continue;
                if (!bessel_noleave_event(k1.t - t, w, d1, hi, std::nullopt, rng)) continue;
            }
            left = right = BridgeSkeleton::Segment{hi, std::nullopt};
            if (seg.must_exceed) {
                const double K = *seg.must_exceed;
                const std::optional<double> outer =
                    std::isfinite(hi) ? std::optional<double>(hi) : std::nullopt;
                const bool lin = bessel_noleave_event(t - k0.t, d0, w, K, outer, rng);
                const bool rin = bessel_noleave_event(k1.t - t, w, d1, K, outer, rng);
                if (lin && rin) continue;
                left = lin ? BridgeSkeleton::Segment{K, std::nullopt} : BridgeSkeleton::Segment{hi, K};
                right = rin ? BridgeSkeleton::Segment{K, std::nullopt} : BridgeSkeleton::Segment{hi, K};
            }
            v = s.from_distance(w);
            break;
        }
    } else if (s.layer_) {
        const Layer L = *s.layer_;
        int tries = 0;
        for (;; ++tries) {
            if (tries == kRejectionCap) throw std::runtime_error("bridge_interpolate: rejection cap reached");
            v = gaussian_bridge_draw(k0.t, k0.v, k1.t, k1.v, t, rng);
            if (v <= L.lower || v >= L.upper) continue;
            if (!noexit_event(t - k0.t, k0.v, v, L.lower, L.upper, rng)) continue;
            if (!noexit_event(k1.t - t, v, k1.v, L.lower, L.upper, rng)) continue;
            break;
        }
    } else {
        v = gaussian_bridge_draw(k0.t, k0.v, k1.t, k1.v, t, rng);
    }

    s.knots_.insert(s.knots_.begin() + static_cast<std::ptrdiff_t>(j), {t, v});
    s.segs_[j - 1] = left;
    s.segs_.insert(s.segs_.begin() + static_cast<std::ptrdiff_t>(j), right);
    return v;
}

bool crossing_event(double T, double x, double y, double K, Rng& rng) {
    AlternatingSeries s = AlternatingSeries::bridge_noexit(T, x, y, K);
    return retrospective_bernoulli(rng, s);
}

bool noexit_event(double T, double x, double y, double lower, double upper, Rng& rng) {
    AlternatingSeries s = interval_series(T, x, y, lower, upper);
    return retrospective_bernoulli(rng, s);
}

double noexit_probability(double T, double x, double y, double lower, double upper) {
    return interval_series(T, x, y, lower, upper).evaluate();
}

int sample_layer(double T, double x, double y, const LayerSequence& layers, Rng& rng) {
    const double u = rng.uniform();
    const double half = 0.5 * (x - y);
    for (int i = 1;; ++i) {
        AlternatingSeries s = AlternatingSeries::bridge_noexit(T, half, -half, std::abs(half) + layers(i));
        for (int n = 0;; ++n) {
            if (n == kSeriesTermCap) throw SeriesNonConvergence("sample_layer: no separation");
            const ProbabilityBounds b = s.next();
            if (u < b.lower) return i;
            if (u >= b.upper) break;
        }
    }
}

void sample_extremum_and_decompose(BridgeSkeleton& s, int I, const LayerSequence& layers, Rng& rng) {
    if (I < 1) throw std::invalid_argument("sample_extremum_and_decompose: layer index must be >= 1");
    if (s.knots_.size() != 2 || s.extremum_ || s.layer_) {
        throw std::logic_error("sample_extremum_and_decompose: skeleton must be bare");
    }
    const double T = s.T_;
    const double x0 = s.knots_[0].v;
    const double y0 = s.knots_[1].v;
    const double aI = layers(I);
    const double aI1 = layers(I - 1);

    for (int tries = 0;; ++tries) {
        if (tries == kRejectionCap) throw std::runtime_error("sample_extremum_and_decompose: rejection cap reached");
        const bool upper = rng.uniform() < 0.5;
        // Work with the maximum; the minimum case is its mirror image.
        const double sg = upper ? 1.0 : -1.0;
        const double x = sg * x0, y = sg * y0;
        const double top = std::max(x, y), bottom = std::min(x, y);
        const double M = bounded_max(T, x, y, top + aI1, top + aI, rng);
        const double tau = argmax_time(T, x, y, M, rng);
        const double k_outer = M - (bottom - aI);
        const double k_inner = M - (bottom - aI1);
        const double dx = M - x, dy = M - y;
        if (!bessel_noleave_event(tau, 0.0, dx, k_outer, std::nullopt, rng)) continue;
        if (!bessel_noleave_event(T - tau, 0.0, dy, k_outer, std::nullopt, rng)) continue;
        const bool lin = bessel_noleave_event(tau, 0.0, dx, k_inner, k_outer, rng);
        const bool rin = bessel_noleave_event(T - tau, 0.0, dy, k_inner, k_outer, rng);
        if (!(lin && rin) && rng.uniform() >= 0.5) continue;

        const ExtremumKind kind = upper ? ExtremumKind::max : ExtremumKind::min;
        const double value = sg * M;
        s.extremum_ = Extremum{tau, value, kind};
        s.knots_.insert(s.knots_.begin() + 1, {tau, value});
        const auto status = [&](bool in) {
            return in ? BridgeSkeleton::Segment{k_inner, std::nullopt}
                      : BridgeSkeleton::Segment{k_outer, k_inner};
        };
        s.segs_ = {status(lin), status(rin)};
        const double reach = (lin && rin) ? k_inner : k_outer;
        s.layer_ = upper ? Layer{value - reach, value} : Layer{value, value + reach};
        return;
    }
}

bool bessel_noleave_event(double T, double x, double y, double K, std::optional<double> L, Rng& rng) {
    if (x < 0.0 || y < 0.0) throw std::invalid_argument("bessel_noleave_event: endpoints must be >= 0");
    if (!L) {
        AlternatingSeries s = bessel_series(T, x, y, K);
        return retrospective_bernoulli(rng, s);
    }
    if (!(K < *L)) throw std::invalid_argument("bessel_noleave_event: need K < L");
    AlternatingSeries num = bessel_series(T, x, y, K);
    AlternatingSeries den = bessel_series(T, x, y, *L);
    return retrospective_ratio_bernoulli(rng, num, den);
}

double bessel_noleave_probability(double T, double x, double y, double K) {
    return bessel_series(T, x, y, K).evaluate();
}

double bridge_max_survival(double T, double x, double y, double m) {
    if (m <= std::max(x, y)) return 1.0;
    return std::exp(-2.0 * (m - x) * (m - y) / T);
}

}  // namespace cfusion
