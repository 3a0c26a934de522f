#pragma once

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "cfusion/density.hpp"

namespace cfusion {

class ToleranceNotMet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VectorIntegral {
    Vec value;
    double error = 0.0;  // summed |Kronrod - Gauss| over accepted panels
};

// Adaptive 15/31-point Gauss-Kronrod for vector-valued integrands over
// [breaks.front(), breaks.back()], with every break used as a panel edge.
VectorIntegral integrate_vector(const std::function<Vec(double)>& f, std::span<const double> breaks,
                                double rel_tol, int max_panels = 4000);

using UnivariatePtr = std::shared_ptr<const UnivariateDensity>;

struct SumMoments {
    std::array<double, 3> mean{};
    std::array<double, 3> variance{};
    double abs_error = 0.0;
};

// Means and variances of three independent components conditioned on
// x_0 + x_1 + x_2 = s. `eliminated` names the component written as s minus
// the other two; a different choice gives an independent ordering.
SumMoments quadrature_truth(const std::vector<UnivariatePtr>& components, double s, int eliminated = 2,
                            double tol = 1e-4);

}  // namespace cfusion
