#include "cfusion/special.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cfusion {

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: x must be positive");
    return boost::math::digamma(x);
}

double trigamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("trigamma: x must be positive");
    return boost::math::trigamma(x);
}

double polygamma(int n, double x) {
    if (n < 0) throw std::domain_error("polygamma: order must be non-negative");
    if (!(x > 0.0)) throw std::domain_error("polygamma: x must be positive");
    if (n == 0) return boost::math::digamma(x);
    if (n == 1) return boost::math::trigamma(x);
    return boost::math::polygamma(n, x);
}

double log_bessel_i(double nu, double x) {
    if (nu < 0.0 || x < 0.0) throw std::domain_error("log_bessel_i: negative argument");
    if (x == 0.0) return nu == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    gsl_sf_result r;
    gsl_error_handler_t* old = gsl_set_error_handler_off();
    int status = gsl_sf_bessel_Inu_scaled_e(nu, x, &r);
    gsl_set_error_handler(old);
    if (status != GSL_SUCCESS || !(r.val > 0.0)) {
        throw std::runtime_error("log_bessel_i: evaluation failed");
    }
    return std::log(r.val) + x;
}

}  // namespace cfusion
