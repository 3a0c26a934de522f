#pragma once

#include "cfusion/constraints.hpp"

namespace cfusion {

struct VmfParams {
    Vec mean_direction;  // point on the sphere
    double kappa = 0.0;
    Vec center;
    double radius = 1.0;
};

// Unit vector from vMF(mu, kappa) on the unit sphere in R^p.
Vec sample_vmf_unit(const Vec& mu, double kappa, Rng& rng);
Vec sample_vmf(const VmfParams& p, Rng& rng);

// log density of the unit-sphere vMF with respect to surface measure.
double vmf_log_density(const Vec& y, const Vec& mu, double kappa);
// log of the mean of exp(kappa <u, e>) over the unit sphere in R^p.
double log_mean_exp_cosine(int p, double kappa);

struct SphereEndpoint {
    Vec y;
    double weight;      // in (0, 1]
    double log_weight;
};

// Normal(x, T I) restricted to the sphere: the direction is drawn from a vMF
// and the returned weight is the stage-one acceptance probability.
SphereEndpoint sample_vmf_endpoint(const Vec& x, double T, const SphereConstraint& sphere, Rng& rng);
double sphere_log_acceptance_weight(const Vec& x, double T, const SphereConstraint& sphere);

}  // namespace cfusion
