#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "cfusion/density.hpp"
#include "cfusion/rng.hpp"

namespace cfusion {

// {y : A y = c}
struct LinearConstraint {
    Mat A;
    Vec c;

    void validate() const;
};

// {y : |y - center| = radius}
struct SphereConstraint {
    Vec center;
    double radius = 1.0;

    void validate() const;
};

// {y : h(y) = 0} for a smooth h with surjective Jacobian.
struct GeneralConstraint {
    std::function<Vec(const Vec&)> h;
    std::function<Mat(const Vec&)> jacobian;
    double tolerance = 1e-9;
    // Optional lower bound on the distance from a point to the manifold.
    std::function<double(const Vec&)> distance_lower_bound;
    // Optional exact sampler of the uniform law on the manifold.
    std::function<Vec(Rng&)> uniform_sampler;

    bool satisfied(const Vec& y) const;
};

using Constraint = std::variant<LinearConstraint, SphereConstraint, GeneralConstraint>;

// Sum of m blocks of dimension d equals s (coordinate-wise).
LinearConstraint sum_constraint(int m, int d, const Vec& s);

// Minimum-norm Newton iteration onto {h = 0}; nullopt on failure.
std::optional<Vec> newton_project(const GeneralConstraint& g, const Vec& seed, int max_iter = 50);

// Normal(x, T diag(var)) conditioned on A y = c. The decomposition of
// A diag(var)^(1/2) is computed once.
class GaussianLinearSampler {
public:
    GaussianLinearSampler(LinearConstraint constraint, Vec variances);
    explicit GaussianLinearSampler(LinearConstraint constraint);

    Vec sample(const Vec& x, double T, Rng& rng) const;
    // exp(-r' (A D A')^-1 r / (2T)), r = c - A x; equals 1 on the constraint.
    double acceptance_weight(const Vec& x, double T) const;
    double log_acceptance_weight(const Vec& x, double T) const;

    const LinearConstraint& constraint() const { return con_; }

private:
    Vec rotated_residual(const Vec& x) const;

    LinearConstraint con_;
    Vec sd_;
    Mat P_;
    Vec w_;
    Mat Q_;
};

Vec sample_gaussian_linear(const Vec& x, double T, const LinearConstraint& constraint, Rng& rng);
double linear_acceptance_weight(const Vec& x, double T, const LinearConstraint& constraint);

}  // namespace cfusion
