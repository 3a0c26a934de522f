#pragma once

namespace cfusion {

// Digamma and its derivatives for x > 0.
double digamma(double x);
double trigamma(double x);
// n-th derivative of the digamma function, n >= 0.
double polygamma(int n, double x);

// log I_nu(x) for nu >= 0, x >= 0, without overflow for large x.
double log_bessel_i(double nu, double x);

}  // namespace cfusion
