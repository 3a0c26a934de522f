#pragma once

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "cfusion/rng.hpp"
#include "cfusion/series.hpp"

namespace cfusion {

enum class ExtremumKind { min, max };

struct Extremum {
    double time;
    double value;
    ExtremumKind kind;
};

struct Layer {
    double lower;
    double upper;
};

// 0 = a_0 < a_1 < a_2 < ... ; given entries are used as-is and the last
// increment repeats beyond them.
class LayerSequence {
public:
    explicit LayerSequence(double spacing);
    explicit LayerSequence(std::vector<double> a);
    // a_i = i * c * sqrt(T)
    static LayerSequence for_horizon(double T, double c = 1.0);

    double operator()(int i) const;

private:
    std::vector<double> a_;
    double step_;
};

// A Brownian bridge from x at time 0 to y at time T, revealed at finitely
// many times. Optionally conditioned on staying within a layer, and after
// sample_extremum_and_decompose() on its extremum and layer membership.
class BridgeSkeleton {
public:
    BridgeSkeleton(double T, double x, double y);
    BridgeSkeleton(double T, double x, double y, Layer layer);

    double horizon() const { return T_; }
    double start() const { return knots_.front().v; }
    double end() const { return knots_.back().v; }
    const std::optional<Layer>& layer() const { return layer_; }
    const std::optional<Extremum>& extremum() const { return extremum_; }

    // Interior revealed points, excluding the extremum.
    std::vector<std::pair<double, double>> revealed() const;
    std::size_t revealed_count() const;
    std::optional<double> value_at(double t) const;

private:
    friend double bridge_interpolate(BridgeSkeleton& s, double t, Rng& rng);
    friend void sample_extremum_and_decompose(BridgeSkeleton& s, int I, const LayerSequence& layers, Rng& rng);

    struct Knot {
        double t;
        double v;
    };
    // Known behaviour of the path between consecutive knots. With an
    // extremum, bounds are distances from it: the segment stays below
    // `within` and, when must_exceed is set, rises above it somewhere.
    struct Segment {
        double within = std::numeric_limits<double>::infinity();
        std::optional<double> must_exceed;
    };

    double distance(double v) const;
    double from_distance(double d) const;

    double T_;
    std::vector<Knot> knots_;
    std::vector<Segment> segs_;
    std::optional<Layer> layer_;
    std::optional<Extremum> extremum_;
};

// Draws the bridge at t from its conditional law given everything known
// about the skeleton, and records the value.
double bridge_interpolate(BridgeSkeleton& s, double t, Rng& rng);

// True with probability that a Brownian bridge x -> y on [0, T] stays in (-K, K).
bool crossing_event(double T, double x, double y, double K, Rng& rng);
// Same for a general interval (lower, upper).
bool noexit_event(double T, double x, double y, double lower, double upper, Rng& rng);
double noexit_probability(double T, double x, double y, double lower, double upper);

// Smallest i with the bridge inside [min(x,y) - a_i, max(x,y) + a_i].
int sample_layer(double T, double x, double y, const LayerSequence& layers, Rng& rng);

// Conditions a bare skeleton on layer I: picks the max or min side, draws
// the extremum and its time, and verifies the other side against the layer.
void sample_extremum_and_decompose(BridgeSkeleton& s, int I, const LayerSequence& layers, Rng& rng);

// Bessel-3 bridge from x to y (distances, >= 0) over [0, T] stays below K;
// with L, conditionally on staying below L > K.
bool bessel_noleave_event(double T, double x, double y, double K, std::optional<double> L, Rng& rng);
double bessel_noleave_probability(double T, double x, double y, double K);

// Law of the maximum of a bridge; exposed for tests.
double bridge_max_survival(double T, double x, double y, double m);

}  // namespace cfusion
