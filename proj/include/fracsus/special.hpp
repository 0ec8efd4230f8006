#ifndef FRACSUS_SPECIAL_HPP
#define FRACSUS_SPECIAL_HPP

#include <complex>

namespace fracsus {

using complex = std::complex<double>;

// Euler Gamma function on the complex plane (Lanczos approximation,
// g = 607/128 with 15 coefficients; relative error below 1e-13 away
// from the poles).  Real arguments delegate to std::tgamma.
complex gamma_complex(complex z);

double gamma_real(double x);

// Principal-branch power a^b for real a > 0 and complex b.
inline complex cpow_pos(double a, complex b) {
    return std::exp(b * std::log(a));
}

} // namespace fracsus

#endif
