#include "fracsus/marchaud.hpp"

#include "fracsus/interp.hpp"
#include "fracsus/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracsus {

namespace {
const double kInvE = 0.36787944117144233;

void require_strip(complex eta) {
    if (!(eta.real() > 0.0 && eta.real() < 1.0))
        throw std::domain_error("Marchaud order must satisfy 0 < Re eta < 1");
}

// \int_{u0}^{inf} u^{pow_u} e^{-a u} du for Re a > 0, by composite
// Gauss-Legendre over an exponentially sufficient range.
complex exp_poly_tail(double u0, double pow_u, complex a) {
    double ar = a.real();
    if (!(ar > 0.0)) throw std::domain_error("exp_poly_tail: need Re a > 0");
    double range = (60.0 + 20.0 * std::abs(pow_u)) / ar;
    auto f = [&](double u) {
        return std::pow(u, pow_u) * std::exp(-a * u);
    };
    complex s{};
    int nseg = 64;
    for (int i = 0; i < nseg; ++i) {
        double lo = u0 + range * i / nseg, hi = u0 + range * (i + 1) / nseg;
        s += integrate_gauss(f, lo, hi, gauss15());
    }
    return s;
}

// \int_{a}^{b} u^{pow_u} e^{c u} du on a bounded range.
complex exp_poly_range(double a, double b, double pow_u, complex c) {
    if (b <= a) return complex{};
    auto f = [&](double u) { return std::pow(u, pow_u) * std::exp(c * u); };
    complex s{};
    int nseg = std::max(16, int((b - a) * 4));
    for (int i = 0; i < nseg; ++i) {
        double lo = a + (b - a) * i / nseg, hi = a + (b - a) * (i + 1) / nseg;
        s += integrate_gauss(f, lo, hi, gauss15());
    }
    return s;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

complex gamma_factor(complex eta) {
    require_strip(eta);
    return eta / gamma_complex(1.0 - eta);
}

double gamma_factor(double eta) {
    return gamma_factor(complex(eta, 0.0)).real();
}

MarchaudKernel MarchaudKernel::full(complex eta) {
    require_strip(eta);
    MarchaudKernel k;
    k.variant_ = Variant::full;
    k.wkind_ = WeightKind::power;
    k.eta_ = eta;
    return k;
}

MarchaudKernel MarchaudKernel::truncated(complex eta, double eps1) {
    require_strip(eta);
    if (!(eps1 > 0.0))
        throw std::domain_error("truncated kernel: eps1 > 0 required");
    MarchaudKernel k;
    k.variant_ = Variant::truncated;
    k.wkind_ = WeightKind::power;
    k.eta_ = eta;
    k.eps1_ = eps1;
    return k;
}

complex MarchaudKernel::prefactor() const {
    return variant_ == Variant::weighted ? complex(1.0, 0.0)
                                         : gamma_factor(eta_);
}

double MarchaudKernel::upper_limit() const {
    if (variant_ == Variant::truncated) return eps1_;
    if (wkind_ == WeightKind::zeta_log && eps1_ > 0.0) return eps1_;
    return std::numeric_limits<double>::infinity();
}

complex MarchaudKernel::weight(double t) const {
    if (!(t > 0.0)) throw std::domain_error("kernel weight needs t > 0");
    switch (wkind_) {
    case WeightKind::power:
        return cpow_pos(t, -1.0 - eta_);
    case WeightKind::power_log: {
        double base = std::pow(t, -1.0 - eta_.real());
        if (t >= kInvE) return base;
        return base * std::pow(-std::log(t), -beta_);
    }
    case WeightKind::zeta_log: {
        complex base = cpow_pos(t, -1.0 - eta_);
        if (nlog_ == 0) return base;
        return base * std::pow(std::log(t), double(nlog_)); // signed
    }
    case WeightKind::custom:
        return custom_(t);
    }
    return {};
}

complex MarchaudKernel::head_moment1(double d) const {
    if (!(d > 0.0)) return {};
    switch (wkind_) {
    case WeightKind::power:
        return cpow_pos(d, 1.0 - eta_) / (1.0 - eta_);
    case WeightKind::power_log: {
        double eta = eta_.real();
        double dd = std::min(d, kInvE);
        complex v{};
        if (d > kInvE) { // plain power piece on [1/e, d]
            if (eta == 1.0)
                v += std::log(d) + 1.0;
            else
                v += (std::pow(d, 1.0 - eta) - std::pow(kInvE, 1.0 - eta)) /
                     (1.0 - eta);
        }
        double u0 = -std::log(dd);
        if (eta == 1.0) {
            if (!(beta_ > 1.0))
                throw std::domain_error("power-log head diverges at eta=1, beta<=1");
            v += std::pow(u0, 1.0 - beta_) / (beta_ - 1.0);
        } else {
            v += exp_poly_tail(u0, -beta_, complex(1.0 - eta, 0.0));
        }
        return v;
    }
    case WeightKind::zeta_log: {
        if (d > 1.0)
            throw std::domain_error("zeta kernel head only defined for d <= 1");
        double u0 = -std::log(d);
        double sgn = (nlog_ % 2 == 0) ? 1.0 : -1.0;
        return sgn * exp_poly_tail(std::max(u0, 1e-300), double(nlog_),
                                   1.0 - eta_);
    }
    case WeightKind::custom: {
        // geometric composite; (hh) guarantees integrability of t * weight
        auto f = [&](double t) { return t * custom_(t); };
        return integrate_geometric(f, std::max(1e-30, d * 1e-24), d, 0.5,
                                   gauss15());
    }
    }
    return {};
}

complex MarchaudKernel::tail_mass(double T) const {
    if (!(T > 0.0)) throw std::domain_error("tail_mass: T > 0");
    switch (wkind_) {
    case WeightKind::power:
        return cpow_pos(T, -eta_) / eta_;
    case WeightKind::power_log: {
        double eta = eta_.real();
        if (T >= kInvE) return complex(std::pow(T, -eta) / eta, 0.0);
        // [T, 1/e] in u = -log t, plus the exact power tail beyond 1/e
        complex v = exp_poly_range(1.0, -std::log(T), -beta_,
                                   complex(eta, 0.0));
        v += complex(std::pow(kInvE, -eta) / eta, 0.0);
        return v;
    }
    case WeightKind::zeta_log: {
        complex v{};
        if (T < 1.0) {
            double sgn = (nlog_ % 2 == 0) ? 1.0 : -1.0;
            v += sgn * exp_poly_range(0.0, -std::log(T), double(nlog_), eta_);
        }
        double lo = std::max(T, 1.0);
        // \int_{lo}^{inf} (log t)^n t^{-1-eta} dt, t = e^v
        double v0 = std::log(lo);
        v += exp_poly_tail(std::max(v0, 1e-300), double(nlog_), eta_);
        return v;
    }
    case WeightKind::custom: {
        auto f = [&](double u) { // t = 1/u substitution for the far tail
            double t = 1.0 / u;
            return custom_(t) * t * t;
        };
        complex far = integrate_geometric(f, 1e-12, 1.0, 0.5, gauss15());
        if (T >= 1.0) {
            auto g = [&](double u) {
                double t = 1.0 / u;
                return custom_(t) * t * t;
            };
            return integrate_geometric(g, 1e-12, 1.0 / T, 0.5, gauss15());
        }
        auto mid = integrate_adaptive_c(
            [&](double t) { return custom_(t); }, T, 1.0, 1e-12);
        return far + mid;
    }
    }
    return {};
}

MarchaudKernel kernel_power_log(double eta, double beta) {
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::domain_error("kernel_power_log: need 0 < eta <= 1");
    MarchaudKernel k;
    k.variant_ = Variant::weighted;
    k.wkind_ = WeightKind::power_log;
    k.eta_ = complex(eta, 0.0);
    k.beta_ = beta;
    // (hh) certification in u = -log t coordinates with cutoffs U = e^j:
    // head integral \int_0^1 t^gamma/|ell| dt = \int_1^inf e^{(eta-gamma)u} u^{-beta} du
    double gamma = (beta > 1.0) ? std::min(eta, 1.0 - 1e-9)
                                : eta + (1.0 - eta) / 8.0;
    if (eta == 1.0 && !(beta > 1.0))
        throw std::domain_error(
            "kernel_power_log: (hh) certification fails for eta = 1, beta <= 1");
    auto J = [&](double U) {
        return exp_poly_range(1.0, U, -beta, complex(eta - gamma, 0.0)).real();
    };
    double prev = J(std::exp(2.0)), prev_inc = -1.0;
    bool ok = true;
    for (int j = 3; j <= 7; ++j) {
        double cur = J(std::exp(double(j)));
        double inc = cur - prev;
        if (prev_inc > 0.0 && inc > 0.92 * prev_inc) ok = false;
        prev = cur;
        prev_inc = std::max(inc, 0.0);
    }
    if (!ok)
        throw std::domain_error(
            "kernel_power_log: (hh) certification fails (head integral "
            "diverges numerically)");
    k.gamma_ = gamma;
    return k;
}

MarchaudKernel zeta_log_kernel(complex eta0, int n, double eps1) {
    require_strip(eta0);
    if (n < 0) throw std::domain_error("zeta_log_kernel: n >= 0");
    MarchaudKernel k;
    k.variant_ = Variant::weighted;
    k.wkind_ = WeightKind::zeta_log;
    k.eta_ = eta0;
    k.nlog_ = n;
    k.eps1_ = eps1;
    k.gamma_ = eta0.real() + (1.0 - eta0.real()) / 8.0;
    // (hh) head with gamma slightly above Re eta0: exponential decay beats u^n
    double a = k.gamma_ - eta0.real();
    double head = exp_poly_tail(1.0, double(n), complex(a, 0.0)).real();
    if (!std::isfinite(head))
        throw std::domain_error("zeta_log_kernel: certification failed");
    return k;
}

// ---------------------------------------------------------------------------
// SampledCurve

struct SampledCurve::SideInterp {
    Pchip interp; // in s = log|t|
    double smin, smax;
};

SampledCurve::SampledCurve(std::vector<double> t, std::vector<double> g,
                           double holder_exponent)
    : t_(std::move(t)), g_(std::move(g)), holder_(holder_exponent) {
    if (t_.size() != g_.size() || t_.size() < 3)
        throw std::invalid_argument("SampledCurve: bad sizes");
    bool has_zero = false;
    for (size_t i = 0; i < t_.size(); ++i) {
        if (i + 1 < t_.size() && !(t_[i] < t_[i + 1]))
            throw std::invalid_argument("SampledCurve: grid not increasing");
        if (t_[i] == 0.0) {
            has_zero = true;
            g0_ = g_[i];
        }
    }
    if (!has_zero)
        throw std::invalid_argument("SampledCurve: grid must contain 0");

    std::vector<double> sp, gp, sn, gn;
    for (size_t i = 0; i < t_.size(); ++i) {
        if (t_[i] > 0.0) {
            sp.push_back(std::log(t_[i]));
            gp.push_back(g_[i]);
        } else if (t_[i] < 0.0) {
            sn.push_back(std::log(-t_[i]));
            gn.push_back(g_[i]);
        }
    }
    std::vector<size_t> idx;
    if (sp.size() >= 2) {
        pos_ = std::make_shared<SideInterp>(
            SideInterp{Pchip(sp, gp), sp.front(), sp.back()});
        tmin_pos_ = std::exp(sp.front());
    }
    if (sn.size() >= 2) {
        // negative side stored with increasing s = log|t|
        std::vector<double> s2(sn.rbegin(), sn.rend());
        std::vector<double> g2(gn.rbegin(), gn.rend());
        // sn was decreasing in |t| as t increases toward 0; reversed is increasing
        neg_ = std::make_shared<SideInterp>(
            SideInterp{Pchip(s2, g2), s2.front(), s2.back()});
        tmin_neg_ = std::exp(s2.front());
    }
}

SampledCurve SampledCurve::from_function(
    const std::function<double(double)>& f, double eps1, double q,
    int per_side, const std::vector<double>& outer) {
    std::vector<double> ts;
    for (int j = per_side - 1; j >= 0; --j) ts.push_back(eps1 * std::pow(q, j));
    std::vector<double> grid;
    for (double o : outer) grid.push_back(-o);
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) grid.push_back(-*it);
    grid.push_back(0.0);
    for (double t : ts) grid.push_back(t);
    for (double o : outer) grid.push_back(o);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<double> vals(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid[i]);
    return SampledCurve(std::move(grid), std::move(vals));
}

double SampledCurve::operator()(double t) const {
    if (t == 0.0) return g0_;
    const auto& side = (t > 0.0) ? pos_ : neg_;
    double tmin = (t > 0.0) ? tmin_pos_ : tmin_neg_;
    if (!side) return g0_;
    double a = std::abs(t);
    if (a < tmin) {
        // Holder head model between 0 and the first grid point
        double gmin = side->interp(side->smin);
        return g0_ + (gmin - g0_) * std::pow(a / tmin, holder_);
    }
    double s = std::log(a);
    if (s > side->smax) s = side->smax; // constant beyond the grid
    return side->interp(s);
}

// ---------------------------------------------------------------------------
// Marchaud derivative

namespace {

struct SideIntegral {
    complex value;
    double err;
};

// one-sided integral \int_0^... (g(t0) - g(t0 - sgn*tau)) w(tau) dtau
SideIntegral one_side(const std::function<double(double)>& g, double t0,
                      int sgn, const MarchaudKernel& ker,
                      const MarchaudOptions& opt) {
    auto h = [&](double tau) { return g(t0) - g(t0 - sgn * tau); };
    const double upper = ker.upper_limit();
    double B = std::min(upper, opt.t_max);
    bool have_const = opt.const_beyond.has_value();
    if (have_const) B = std::min(B, *opt.const_beyond);

    SideIntegral out{complex{}, 0.0};

    // analytic head on [0, delta] with a linear difference model
    double delta = std::min(opt.delta, 0.25 * B);
    double m1 = h(delta) / delta;
    double m2 = h(0.5 * delta) / (0.5 * delta);
    double d1 = 2.0 * m2 - m1; // Richardson toward tau -> 0
    complex mom = ker.head_moment1(delta);
    out.value += d1 * mom;
    out.err += std::abs(m1 - m2) * std::abs(mom);

    // numeric middle [delta, B]
    std::vector<double> cuts{delta, B};
    for (double b : opt.t_breaks)
        if (b > delta && b < B) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double max_abs_g = std::abs(g(t0));
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double lo = cuts[i], hi = cuts[i + 1];
        auto f = [&](double tau) {
            double hv = h(tau);
            max_abs_g = std::max(max_abs_g, std::abs(hv));
            return hv * ker.weight(tau);
        };
        // geometric refinement toward lo resolves the kernel singularity;
        // cap segment width at 2 to keep oscillatory tails resolved
        double t = hi;
        while (t > lo * (1.0 + 1e-14) && (t - lo) > 1e-300) {
            double nxt = std::max(lo, std::min(t * 0.8, t - 1e-14));
            if (t - nxt > 2.0) nxt = t - 2.0;
            complex fine = integrate_gauss(f, nxt, t, gauss15());
            complex coarse = integrate_gauss(f, nxt, t, gauss7());
            out.value += fine;
            out.err += std::abs(fine - coarse);
            t = nxt;
        }
    }

    // tail beyond B
    if (have_const && B == *opt.const_beyond && B < upper) {
        double hc = h(B * (1.0 + 1e-12));
        complex tail = ker.tail_mass(B);
        if (std::isfinite(upper)) tail -= ker.tail_mass(upper);
        out.value += hc * tail;
    } else if (!std::isfinite(upper) && !have_const && B == opt.t_max) {
        out.err += 2.0 * max_abs_g * std::abs(ker.tail_mass(B));
    }
    return out;
}

} // namespace

MarchaudResult marchaud(const std::function<double(double)>& g, double t0,
                        const MarchaudKernel& kernel, Side side,
                        const MarchaudOptions& opt) {
    complex pref = kernel.prefactor();
    MarchaudResult r;
    if (side == Side::plus) {
        auto s = one_side(g, t0, +1, kernel, opt);
        r.value = pref * s.value;
        r.error_estimate = std::abs(pref) * s.err;
    } else if (side == Side::minus) {
        auto s = one_side(g, t0, -1, kernel, opt);
        r.value = pref * s.value;
        r.error_estimate = std::abs(pref) * s.err;
    } else {
        auto sp = one_side(g, t0, +1, kernel, opt);
        auto sm = one_side(g, t0, -1, kernel, opt);
        r.value = 0.5 * pref * (sp.value - sm.value);
        r.error_estimate = 0.5 * std::abs(pref) * (sp.err + sm.err);
    }
    return r;
}

MarchaudResult marchaud(const SampledCurve& curve, double t0,
                        const MarchaudKernel& kernel, Side side,
                        MarchaudOptions opt) {
    for (double t : curve.grid()) {
        double off = std::abs(t - t0);
        if (off > 0.0) opt.t_breaks.push_back(off);
    }
    if (!opt.const_beyond) {
        double lo = std::abs(curve.grid().front() - t0);
        double hi = std::abs(curve.grid().back() - t0);
        opt.const_beyond = std::max(lo, hi); // constant beyond the grid
    }
    double tmin = curve.smallest_positive();
    if (tmin > 0.0) opt.delta = std::min(opt.delta, tmin);
    auto f = [&curve](double t) { return curve(t); };
    return marchaud(f, t0, kernel, side, opt);
}

complex heaviside_closed(double x, double u, complex eta) {
    require_strip(eta);
    if (x == u)
        throw std::domain_error("heaviside_closed: singular at x = u");
    return -cpow_pos(std::abs(x - u), -eta) /
           (2.0 * gamma_complex(1.0 - eta));
}

complex heaviside_truncated_closed(double y, double u, complex eta,
                                   double eps1) {
    require_strip(eta);
    if (!(eps1 > 0.0))
        throw std::domain_error("heaviside_truncated_closed: eps1 > 0");
    if (y == u)
        throw std::domain_error("heaviside_truncated_closed: singular at y = u");
    if (std::abs(y - u) >= eps1) return complex{};
    return -cpow_pos(std::abs(y - u), -eta) /
           (2.0 * gamma_complex(1.0 - eta));
}

} // namespace fracsus
