#include "fracsus/special.hpp"

#include <cmath>

namespace fracsus {

namespace {

// Lanczos coefficients for g = 607/128, n = 15 (Godfrey's set, used by
// Boost and others; ~15 significant digits on Re z > 0).
constexpr double kLanczosG = 4.7421875; // 607/128
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

complex lanczos_sum(complex z) {
    complex s = kLanczos[0];
    for (int i = 1; i < 15; ++i)
        s += kLanczos[i] / (z + double(i));
    return s;
}

} // namespace

double gamma_real(double x) { return std::tgamma(x); }

complex gamma_complex(complex z) {
    if (z.imag() == 0.0 && z.real() > 0.0)
        return complex(std::tgamma(z.real()), 0.0);
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const double pi = 3.14159265358979323846;
        return pi / (std::sin(pi * z) * gamma_complex(1.0 - z));
    }
    z -= 1.0;
    complex base = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * 3.14159265358979323846) *
           std::pow(base, z + 0.5) * std::exp(-base) * lanczos_sum(z);
}

} // namespace fracsus
