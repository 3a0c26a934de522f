#pragma once

#include <string>
#include <vector>

#include "cfusion/fusion.hpp"
#include "cfusion/quadrature.hpp"

namespace cfusion {

// t_3 and t_5 constrained to x_1 + x_2 = 0.
FusionProblem toy_problem(double T = 1.0);
// Unnormalised log density of x_1 under the toy problem.
double toy_log_density(double x);

std::vector<UnivariatePtr> genlog_components();   // GenLog(3,0.4,2,-5), (3,0.4,1,-2), (3,0.4,1,-3)
std::vector<UnivariatePtr> student_components();  // T_2.01 shifted to -2, 3, 5
std::vector<UnivariatePtr> gaussian_components(); // N(0,1) three times
inline constexpr double kScenarioSum = 10.0;

// Three scaled T factors on {sum x = 0, sum x^2 / 3 = 8}.
std::vector<UnivariatePtr> nonlinear_components();
GeneralConstraint nonlinear_constraint();
FusionProblem nonlinear_problem(double T = 0.5);
// Local maxima of the product density along the constraint circle, found
// on a fine angular grid and refined by golden-section search.
std::vector<Vec> nonlinear_modes();

FusionProblem sum_problem(const std::vector<UnivariatePtr>& comps, double s, double T);

}  // namespace cfusion
