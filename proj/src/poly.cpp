#include "fracsus/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracsus {

PiecewisePoly::PiecewisePoly(std::vector<double> knots,
                             std::vector<std::array<double, 4>> coeffs)
    : knots_(std::move(knots)), coeffs_(std::move(coeffs)) {
    if (knots_.size() < 2 || coeffs_.size() + 1 != knots_.size())
        throw std::invalid_argument("PiecewisePoly: inconsistent sizes");
    for (size_t i = 0; i + 1 < knots_.size(); ++i)
        if (!(knots_[i] < knots_[i + 1]))
            throw std::invalid_argument("PiecewisePoly: knots not increasing");
}

PiecewisePoly PiecewisePoly::constant(double value, double x0, double x1) {
    return PiecewisePoly({x0, x1}, {{{value, 0.0, 0.0, 0.0}}});
}

PiecewisePoly PiecewisePoly::linear(double slope, double intercept, double x0,
                                    double x1) {
    return PiecewisePoly({x0, x1},
                         {{{intercept + slope * x0, slope, 0.0, 0.0}}});
}

PiecewisePoly PiecewisePoly::monomial(int m, double x0, double x1) {
    if (m < 0 || m > 3) throw std::invalid_argument("monomial: need 0<=m<=3");
    // expand (u + x0)^m
    std::array<double, 4> c{0, 0, 0, 0};
    std::array<double, 4> binom{1, 0, 0, 0};
    for (int k = 0; k < m; ++k) { // multiply by (u + x0)
        std::array<double, 4> nxt{0, 0, 0, 0};
        for (int j = 0; j < 4; ++j) {
            if (binom[j] == 0.0) continue;
            nxt[j] += binom[j] * x0;
            if (j + 1 < 4) nxt[j + 1] += binom[j];
        }
        binom = nxt;
    }
    c = binom;
    return PiecewisePoly({x0, x1}, {c});
}

namespace {
size_t piece_index(const std::vector<double>& knots, double x) {
    if (x <= knots.front()) return 0;
    if (x >= knots.back()) return knots.size() - 2;
    auto it = std::upper_bound(knots.begin(), knots.end(), x);
    return size_t(it - knots.begin()) - 1;
}
} // namespace

double PiecewisePoly::operator()(double x) const {
    size_t i = piece_index(knots_, x);
    double u = x - knots_[i];
    const auto& c = coeffs_[i];
    return ((c[3] * u + c[2]) * u + c[1]) * u + c[0];
}

PiecewisePoly PiecewisePoly::derivative() const {
    std::vector<std::array<double, 4>> d(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const auto& c = coeffs_[i];
        d[i] = {c[1], 2.0 * c[2], 3.0 * c[3], 0.0};
    }
    return PiecewisePoly(knots_, d);
}

double PiecewisePoly::integral(double a, double b) const {
    if (a == b) return 0.0;
    if (a > b) return -integral(b, a);
    double total = 0.0;
    size_t i0 = piece_index(knots_, a), i1 = piece_index(knots_, b);
    for (size_t i = i0; i <= i1; ++i) {
        double lo = std::max(a, knots_[i]);
        double hi = (i + 1 < knots_.size()) ? std::min(b, knots_[i + 1]) : b;
        if (hi <= lo) continue;
        const auto& c = coeffs_[i];
        auto prim = [&](double x) {
            double u = x - knots_[i];
            return ((c[3] / 4.0 * u + c[2] / 3.0) * u + c[1] / 2.0) * u * u +
                   c[0] * u;
        };
        total += prim(hi) - prim(lo);
    }
    return total;
}

double frac_moment(double a, double b, double p, double alpha, int parity) {
    if (a == b) return 0.0;
    if (a > b) return -frac_moment(b, a, p, alpha, parity);
    parity &= 1;
    auto prim = [&](double x) {
        double u = x - p;
        double m = std::pow(std::abs(u), alpha + 1.0) / (alpha + 1.0);
        if (parity == 0) return (u >= 0.0 ? m : -m); // integrand |u|^a
        return m;                                    // integrand sgn(u)|u|^a
    };
    return prim(b) - prim(a);
}

double PiecewisePoly::integral_against_power(double a, double b, double p,
                                             double alpha, int parity) const {
    if (a == b) return 0.0;
    if (a > b) return -integral_against_power(b, a, p, alpha, parity);
    double total = 0.0;
    size_t i0 = piece_index(knots_, a), i1 = piece_index(knots_, b);
    for (size_t i = i0; i <= i1; ++i) {
        double lo = std::max(a, knots_[i]);
        double hi = (i + 1 < knots_.size()) ? std::min(b, knots_[i + 1]) : b;
        if (hi <= lo) continue;
        // re-center the piece at p: x - knot = (x-p) + t with t = p - knot,
        // so (x-knot)^m = sum_j C(m,j) (x-p)^j t^{m-j}
        const auto& c = coeffs_[i];
        double t = p - knots_[i];
        double d[4] = {0, 0, 0, 0};
        static const int C[4][4] = {
            {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
        for (int m = 0; m < 4; ++m) {
            if (c[m] == 0.0) continue;
            double tp = 1.0;
            for (int j = m; j >= 0; --j) { // t^{m-j}
                d[j] += c[m] * C[m][j] * tp;
                tp *= t;
            }
        }
        for (int j = 0; j < 4; ++j) {
            if (d[j] == 0.0) continue;
            total += d[j] * frac_moment(lo, hi, p, alpha + j, parity + j);
        }
    }
    return total;
}

Observable Observable::preset(const std::string& name) {
    Observable o;
    o.name = name;
    if (name == "x") {
        o.poly = PiecewisePoly::monomial(1);
    } else if (name == "x2") {
        o.poly = PiecewisePoly::monomial(2);
    } else if (name == "one") {
        o.poly = PiecewisePoly::constant(1.0);
    } else if (name == "sin_pi_x") {
        o.is_poly = false;
        o.fn = [](double x) { return std::sin(3.14159265358979323846 * x); };
    } else {
        throw std::invalid_argument("unknown observable preset: " + name);
    }
    return o;
}

Observable Observable::from_poly(PiecewisePoly p, std::string name) {
    Observable o;
    o.name = std::move(name);
    o.poly = std::move(p);
    return o;
}

} // namespace fracsus
