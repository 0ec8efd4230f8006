#ifndef FRACSUS_QUADRATURE_HPP
#define FRACSUS_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace fracsus {

// 7- and 15-point Gauss-Legendre rules on [-1,1].
struct GaussRule {
    const double* x;
    const double* w;
    int n;
};
const GaussRule& gauss7();
const GaussRule& gauss15();

template <typename F>
auto integrate_gauss(F&& f, double a, double b, const GaussRule& rule)
    -> decltype(f(a)) {
    using R = decltype(f(a));
    const double h = 0.5 * (b - a), m = 0.5 * (a + b);
    R s{};
    for (int i = 0; i < rule.n; ++i)
        s += rule.w[i] * f(m + h * rule.x[i]);
    return s * h;
}

// Adaptive integration with a GL15 vs GL7 error estimate.  `breaks`
// lists known kinks/jumps of the integrand; the interval is split there
// before the recursion starts.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol,
                          const std::vector<double>& breaks = {},
                          int max_depth = 48);

std::complex<double>
integrate_adaptive_c(const std::function<std::complex<double>(double)>& f,
                     double a, double b, double abs_tol,
                     const std::vector<double>& breaks = {},
                     int max_depth = 48);

// Composite rule over the geometric segmentation
// [t_min, t_max] = U_j [t q^{j+1}, t q^j], resolving power singularities
// at 0.  Returns the integral over [t_min, t_max]; the caller handles
// the head [0, t_min] analytically.
template <typename F>
auto integrate_geometric(F&& f, double t_min, double t_max, double q,
                         const GaussRule& rule) -> decltype(f(t_min)) {
    using R = decltype(f(t_min));
    R s{};
    double hi = t_max;
    while (hi > t_min * (1.0 + 1e-14)) {
        double lo = std::max(hi * q, t_min);
        s += integrate_gauss(f, lo, hi, rule);
        hi = lo;
    }
    return s;
}

} // namespace fracsus

#endif
