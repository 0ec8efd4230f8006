#include "fracsus/maps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracsus {

Branch Branch::make_linear(double slope, double intercept) {
    Branch b;
    b.linear = true;
    b.slope = slope;
    b.intercept = intercept;
    return b;
}

double Branch::inverse(double y, double lo, double hi) const {
    if (linear) return (y - intercept) / slope;
    // monotone bisection refined by Newton
    double a = lo, b = hi;
    double fa = (*this)(a) - y, fb = (*this)(b) - y;
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw std::domain_error("Branch::inverse: value outside branch image");
    for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (a + b);
        double fm = (*this)(m) - y;
        double d = deriv(m);
        if (d != 0.0) {
            double n = m - fm / d;
            if (n > a && n < b) {
                double fn = (*this)(n) - y;
                if (std::abs(fn) < std::abs(fm)) {
                    m = n;
                    fm = fn;
                }
            }
        }
        if (fm == 0.0 || (b - a) < 1e-15 * (1.0 + std::abs(m))) return m;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

UnimodalMap::UnimodalMap(double c, Branch plus, Branch minus, bool validate)
    : c_(c), plus_(std::move(plus)), minus_(std::move(minus)) {
    if (!(c_ > -1.0 && c_ < 1.0))
        throw std::domain_error("UnimodalMap: turning point outside (-1,1)");
    if (validate) check();
}

double UnimodalMap::min_slope() const {
    if (linear_branches())
        return std::min(std::abs(plus_.slope), std::abs(minus_.slope));
    double m = std::numeric_limits<double>::infinity();
    const int n = 64;
    for (int i = 0; i <= n; ++i) {
        double xp = -1.0 + (c_ + 1.0) * i / n;
        double xm = c_ + (1.0 - c_) * i / n;
        m = std::min(m, std::abs(plus_.deriv(xp)));
        m = std::min(m, std::abs(minus_.deriv(xm)));
    }
    return m;
}

void UnimodalMap::check() const {
    const int n = 64;
    for (int i = 0; i <= n; ++i) {
        double xp = -1.0 + (c_ + 1.0) * i / n;
        if (!(plus_.deriv(xp) > 1.0))
            throw std::domain_error("UnimodalMap: increasing branch not expanding");
        double xm = c_ + (1.0 - c_) * i / n;
        if (!(minus_.deriv(xm) < -1.0))
            throw std::domain_error("UnimodalMap: decreasing branch not expanding");
    }
    if (std::abs(plus_(c_) - minus_(c_)) > 1e-12)
        throw std::domain_error("UnimodalMap: branches disagree at c");
    for (double y : {plus_(-1.0), minus_(1.0), plus_(c_)})
        if (y < -1.0 - 1e-12 || y > 1.0 + 1e-12)
            throw std::domain_error("UnimodalMap: f(I) not contained in I");
}

UnimodalMap tent_map(double lambda, double offset) {
    if (!(lambda > 1.0 && lambda < 2.0))
        throw std::domain_error("tent_map: slope must lie in (1,2)");
    double d = lambda - 1.0 + offset;
    return UnimodalMap(0.0, Branch::make_linear(lambda, d),
                       Branch::make_linear(-lambda, d));
}

MapFamily make_tent_fixed_slope(double lambda0, double t0, double eps1) {
    if (!(lambda0 > 1.0 && lambda0 < 2.0))
        throw std::domain_error("make_tent_fixed_slope: lambda0 outside (1,2)");
    if (!(eps1 > 0.0 && eps1 < std::min(std::abs(t0), 2.0 - lambda0 - t0)))
        throw std::domain_error(
            "make_tent_fixed_slope: need 0 < eps1 < min(|t0|, 2-lambda0-t0)");
    if (t0 <= 0.0)
        throw std::domain_error("make_tent_fixed_slope: need t0 > 0 to keep f_t(I) in I");
    MapFamily fam;
    fam.kind = MapFamily::Kind::tent_fixed_slope;
    fam.eps1 = eps1;
    fam.lambda0 = lambda0;
    fam.t0 = t0;
    fam.rule = [lambda0, t0](double t) { return tent_map(lambda0, t0 + t); };
    fam.v0 = [](double) { return 1.0; };
    fam.X0 = [](double) { return 1.0; };
    fam.has_X0 = true;
    return fam;
}

MapFamily make_tent_varying_slope(double lambda0, double eps1) {
    if (!(lambda0 > 1.0 && lambda0 < 2.0))
        throw std::domain_error("make_tent_varying_slope: lambda0 outside (1,2)");
    if (!(eps1 > 0.0 && eps1 < std::min(2.0 - lambda0, lambda0 - 1.0)))
        throw std::domain_error(
            "make_tent_varying_slope: need eps1 < min(2-lambda0, lambda0-1)");
    MapFamily fam;
    fam.kind = MapFamily::Kind::tent_varying_slope;
    fam.eps1 = eps1;
    fam.lambda0 = lambda0;
    fam.rule = [lambda0](double t) { return tent_map(lambda0 + t, 0.0); };
    fam.v0 = [](double x) { return x <= 0.0 ? x + 1.0 : -x + 1.0; };
    fam.X0 = [lambda0](double y) { return (y + 1.0) / lambda0; };
    fam.has_X0 = true;
    return fam;
}

MapFamily make_general(Branch plus, Branch minus, double c,
                       std::function<UnimodalMap(double)> rule, double eps1,
                       std::function<double(double)> v0,
                       std::function<double(double)> X0) {
    UnimodalMap base(c, plus, minus); // validates expansion + continuity
    if (!rule) {
        rule = [c, plus, minus](double) { return UnimodalMap(c, plus, minus, false); };
    }
    MapFamily fam;
    fam.kind = MapFamily::Kind::general;
    fam.eps1 = eps1;
    fam.rule = std::move(rule);
    fam.v0 = std::move(v0);
    fam.X0 = std::move(X0);
    fam.has_X0 = bool(fam.X0);
    return fam;
}

double CriticalOrbit::tail_bound(double norm_v) const {
    if (lambda_min <= 1.0) return std::numeric_limits<double>::infinity();
    return norm_v * std::pow(lambda_min, -double(K)) / (lambda_min - 1.0);
}

CriticalOrbit critical_orbit(const UnimodalMap& map, int K, double tol_per) {
    if (K < 2) throw std::domain_error("critical_orbit: need K >= 2");
    CriticalOrbit orb;
    orb.K = K;
    orb.lambda_min = map.min_slope();
    const double c = map.turning_point();

    orb.points.reserve(K);
    orb.cumderivs.reserve(K);
    double x = map.top(); // c_1
    double cum = 1.0;     // (f^0)'(c_1)
    for (int k = 1; k <= K; ++k) {
        if (std::abs(x) > 1.0 + 1e-12)
            throw std::runtime_error("critical_orbit: orbit left the interval");
        if (std::abs(x - c) < tol_per)
            throw std::domain_error(
                "critical_orbit: orbit point too close to the turning point; "
                "perturb the map parameters");
        orb.points.push_back(x);
        orb.cumderivs.push_back(cum);
        orb.signs.push_back(cum >= 0.0 ? 1 : -1);
        orb.sbar.push_back(1.0 / cum);
        cum *= map.deriv(x);
        x = map(x);
    }

    // periodicity: c_k close to an earlier c_j with matching branch
    // itinerary over one extra period
    auto side = [&](double y) { return y < c ? 0 : 1; };
    for (int k = 1; k < K && !orb.periodic_flag; ++k) {
        for (int j = 0; j < k; ++j) {
            if (std::abs(orb.points[k] - orb.points[j]) >= tol_per) continue;
            int P = k - j;
            if (k + P > K - 1) continue; // not enough data to confirm
            bool match = true;
            for (int i = 0; i < P && match; ++i)
                match = side(orb.points[j + i]) == side(orb.points[k + i]) &&
                        std::abs(orb.points[j + i] - orb.points[k + i]) < 10 * tol_per;
            if (match) {
                orb.periodic_flag = true;
                orb.preperiod = j + 1; // 1-based first cycle index
                orb.period = P;
                orb.distinct_points = j + P;
                break;
            }
        }
    }
    if (!orb.periodic_flag) orb.distinct_points = K;
    return orb;
}

namespace {

double min_abs_comp_deriv(const UnimodalMap& m, double lo, double hi, int n,
                          int x_samples) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= x_samples; ++i) {
        double x = lo + (hi - lo) * i / x_samples;
        double p = 1.0;
        for (int k = 0; k < n; ++k) {
            p *= m.deriv(x);
            x = m(x);
        }
        best = std::min(best, std::abs(p));
    }
    return best;
}

} // namespace

double lambda_n_of_map(const UnimodalMap& m, int n, int x_samples) {
    if (n < 1) throw std::domain_error("lambda_n: n >= 1");
    if (m.linear_branches()) {
        double s = std::min(std::abs(m.branch_plus().slope),
                            std::abs(m.branch_minus().slope));
        return std::pow(s, n);
    }
    // Partition the start interval into pieces on which the length-n
    // composition is monotone (the admissible sign vectors), by cutting at
    // the preimages of c under f^depth; take the min of |(f^n)'| per piece.
    const double c = m.turning_point();
    double best = std::numeric_limits<double>::infinity();
    std::function<void(double, double, int)> rec = [&](double lo, double hi,
                                                       int depth) {
        if (depth == n) {
            best = std::min(best, min_abs_comp_deriv(m, lo, hi, n, x_samples));
            return;
        }
        const int probes = 65;
        std::vector<double> cuts{lo, hi};
        auto fd = [&](double x) {
            for (int k = 0; k < depth; ++k) x = m(x);
            return x;
        };
        double prev = fd(lo) - c;
        double xprev = lo;
        for (int i = 1; i <= probes; ++i) {
            double x = lo + (hi - lo) * i / probes;
            double cur = fd(x) - c;
            if ((prev < 0.0) != (cur < 0.0)) {
                double a = xprev, b = x;
                for (int it = 0; it < 80; ++it) {
                    double mid = 0.5 * (a + b);
                    ((fd(mid) - c < 0.0) == (prev < 0.0) ? a : b) = mid;
                }
                cuts.push_back(0.5 * (a + b));
            }
            prev = cur;
            xprev = x;
        }
        std::sort(cuts.begin(), cuts.end());
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            if (cuts[i + 1] - cuts[i] > 1e-13) rec(cuts[i], cuts[i + 1], depth + 1);
    };
    rec(-1.0, c, 1);
    rec(c, 1.0, 1);
    return best;
}

ExpansionStats expansion_stats(const MapFamily& family, int N, int t_samples) {
    if (N < 1) throw std::domain_error("expansion_stats: N >= 1");
    ExpansionStats st;
    UnimodalMap f0 = family.base();
    st.lambda_n.resize(N);
    for (int n = 1; n <= N; ++n) st.lambda_n[n - 1] = lambda_n_of_map(f0, n);
    st.Lambda_hat = std::pow(st.lambda_n[N - 1], 1.0 / N);

    CriticalOrbit orb = critical_orbit(f0, std::max(2, std::min(N * 4, 64)));
    bool aperiodic = !orb.periodic_flag;
    if (aperiodic) {
        st.good = true;
    } else {
        // |(f^{P})'| over the cycle
        double p = 1.0;
        for (int i = orb.preperiod - 1; i < orb.preperiod - 1 + orb.period; ++i)
            p *= f0.deriv(orb.points[i]);
        st.good = std::abs(p) > 2.0;
    }

    bool conjugated = family.kind == MapFamily::Kind::tent_fixed_slope;
    if (conjugated || aperiodic) {
        double lam = std::numeric_limits<double>::infinity();
        for (int i = 0; i < t_samples; ++i) {
            double t = -family.eps1 +
                       2.0 * family.eps1 * i / std::max(1, t_samples - 1);
            UnimodalMap ft = family.map_at(t);
            lam = std::min(lam, std::pow(lambda_n_of_map(ft, N), 1.0 / N));
        }
        st.Lambda_family = lam;
    } else if (st.good) {
        // periodic turning point: finite-k estimate of the capped constant
        int P = orb.period;
        int k = std::max(1, 12 / std::max(1, P));
        double inv_sup = 0.0;
        for (int i = 0; i < t_samples; ++i) {
            double t = -family.eps1 +
                       2.0 * family.eps1 * i / std::max(1, t_samples - 1);
            UnimodalMap ft = family.map_at(t);
            double lkp = lambda_n_of_map(ft, k * P);
            double val = std::pow(lkp / std::pow(2.0, k), -1.0 / double(k * P));
            inv_sup = std::max(inv_sup, val);
        }
        st.Lambda_family = 1.0 / inv_sup;
    } else {
        st.Lambda_family = 1.0;
    }
    return st;
}

} // namespace fracsus
