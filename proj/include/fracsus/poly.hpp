#ifndef FRACSUS_POLY_HPP
#define FRACSUS_POLY_HPP

#include <array>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace fracsus {

// Piecewise polynomial of degree <= 3 on [x0, x1] split by breakpoints.
// Piece i lives on [knots[i], knots[i+1]] with local coefficients
// c0 + c1 u + c2 u^2 + c3 u^3, u = x - knots[i].
class PiecewisePoly {
  public:
    PiecewisePoly() = default;
    PiecewisePoly(std::vector<double> knots,
                  std::vector<std::array<double, 4>> coeffs);

    static PiecewisePoly constant(double value, double x0 = -1.0,
                                  double x1 = 1.0);
    static PiecewisePoly linear(double slope, double intercept,
                                double x0 = -1.0, double x1 = 1.0);
    // x^m on [x0,x1], m <= 3
    static PiecewisePoly monomial(int m, double x0 = -1.0, double x1 = 1.0);

    double operator()(double x) const;
    PiecewisePoly derivative() const;

    // exact integral of the polynomial over [a,b] (clipped to the domain;
    // the poly is extended by its end pieces outside, callers stay inside)
    double integral(double a, double b) const;

    // exact integral over [a,b] of  poly(x) * |x-p|^alpha * sgn(x-p)^parity,
    // alpha > -1.
    double integral_against_power(double a, double b, double p, double alpha,
                                  int parity) const;

    const std::vector<double>& knots() const { return knots_; }
    const std::vector<std::array<double, 4>>& coeffs() const { return coeffs_; }
    double domain_lo() const { return knots_.front(); }
    double domain_hi() const { return knots_.back(); }

  private:
    std::vector<double> knots_;
    std::vector<std::array<double, 4>> coeffs_;
};

// Observable for response/susceptibility integrals.  Polynomial
// observables get closed-form integrals; generic callables go through
// adaptive quadrature.  `q` records the integrability exponent used by
// the series hypotheses (infinity for bounded observables).
struct Observable {
    std::string name = "phi";
    bool is_poly = true;
    PiecewisePoly poly;
    std::function<double(double)> fn;
    double q = std::numeric_limits<double>::infinity();

    static Observable preset(const std::string& name); // "x", "x2", "one", "sin_pi_x"
    static Observable from_poly(PiecewisePoly p, std::string name = "phi");

    double operator()(double x) const { return is_poly ? poly(x) : fn(x); }
};

// \int_a^b |x-p|^alpha sgn(x-p)^parity dx, alpha > -1.
double frac_moment(double a, double b, double p, double alpha, int parity);

} // namespace fracsus

#endif
