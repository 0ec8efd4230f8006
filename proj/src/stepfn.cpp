#include "fracsus/stepfn.hpp"

#include "fracsus/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracsus {

StepFunction::StepFunction(std::vector<double> breakpoints,
                           std::vector<double> values)
    : bp_(std::move(breakpoints)), val_(std::move(values)) {
    if (val_.size() != bp_.size() + 1)
        throw std::invalid_argument("StepFunction: values.size() != breakpoints.size()+1");
    for (size_t i = 0; i + 1 < bp_.size(); ++i)
        if (!(bp_[i] < bp_[i + 1]))
            throw std::invalid_argument("StepFunction: breakpoints not increasing");
    canonicalize();
}

void StepFunction::canonicalize() {
    if (bp_.empty()) {
        val_.assign(1, 0.0);
        return;
    }
    if (val_.front() != 0.0 || val_.back() != 0.0)
        throw std::invalid_argument(
            "StepFunction: exterior values must be zero (include the support "
            "edges as breakpoints)");
    compress(0.0);
}

StepFunction StepFunction::indicator(double a, double b, double value) {
    if (!(a < b)) throw std::invalid_argument("indicator: need a < b");
    return StepFunction({a, b}, {0.0, value, 0.0});
}

StepFunction StepFunction::heaviside(double u) {
    return StepFunction({-1.0, u}, {0.0, -1.0, 0.0});
}

double StepFunction::operator()(double x) const {
    if (bp_.empty()) return 0.0;
    auto it = std::lower_bound(bp_.begin(), bp_.end(), x);
    if (it != bp_.end() && *it == x) {
        size_t i = size_t(it - bp_.begin());
        return 0.5 * (val_[i] + val_[i + 1]); // midpoint jump convention
    }
    size_t i = size_t(it - bp_.begin());
    return val_[i];
}

double StepFunction::integral() const {
    double s = 0.0;
    for (size_t i = 0; i + 1 < bp_.size(); ++i)
        s += val_[i + 1] * (bp_[i + 1] - bp_[i]);
    return s;
}

double StepFunction::integral(double a, double b) const {
    if (a == b || bp_.empty()) return 0.0;
    if (a > b) return -integral(b, a);
    double s = 0.0;
    for (size_t i = 0; i + 1 < bp_.size(); ++i) {
        double lo = std::max(a, bp_[i]);
        double hi = std::min(b, bp_[i + 1]);
        if (hi > lo) s += val_[i + 1] * (hi - lo);
    }
    return s;
}

double StepFunction::l1_norm() const {
    double s = 0.0;
    for (size_t i = 0; i + 1 < bp_.size(); ++i)
        s += std::abs(val_[i + 1]) * (bp_[i + 1] - bp_[i]);
    return s;
}

void StepFunction::compress(double tol) {
    if (bp_.empty()) return;
    std::vector<double> nbp;
    std::vector<double> nval;
    nval.push_back(val_.front());
    for (size_t i = 0; i < bp_.size(); ++i) {
        double v = val_[i + 1];
        if (!nbp.empty() && bp_[i] - nbp.back() <= tol) {
            nval.back() = v; // sliver collapsed
            continue;
        }
        if (v == nval.back()) continue; // no jump here
        nbp.push_back(bp_[i]);
        nval.push_back(v);
    }
    if (!nbp.empty() && nval.back() != 0.0) {
        // support edge swallowed by a sliver merge; re-close just past it
        nbp.push_back(nbp.back() + std::max(tol, 1e-15));
        nval.push_back(0.0);
    }
    bp_ = std::move(nbp);
    val_ = std::move(nval);
    if (bp_.empty()) val_.assign(1, 0.0);
}

StepFunction& StepFunction::operator+=(const StepFunction& o) {
    if (o.bp_.empty()) return *this;
    if (bp_.empty()) {
        *this = o;
        return *this;
    }
    std::vector<double> nbp;
    nbp.reserve(bp_.size() + o.bp_.size());
    std::merge(bp_.begin(), bp_.end(), o.bp_.begin(), o.bp_.end(),
               std::back_inserter(nbp));
    nbp.erase(std::unique(nbp.begin(), nbp.end()), nbp.end());
    std::vector<double> nval(nbp.size() + 1);
    size_t ia = 0, ib = 0;
    nval[0] = 0.0;
    for (size_t i = 0; i < nbp.size(); ++i) {
        while (ia < bp_.size() && bp_[ia] <= nbp[i]) ++ia;
        while (ib < o.bp_.size() && o.bp_[ib] <= nbp[i]) ++ib;
        nval[i + 1] = val_[ia] + o.val_[ib];
    }
    bp_ = std::move(nbp);
    val_ = std::move(nval);
    compress(0.0);
    return *this;
}

StepFunction& StepFunction::operator*=(double a) {
    if (a == 0.0) {
        *this = StepFunction();
        return *this;
    }
    for (double& v : val_) v *= a;
    return *this;
}

double l1_distance(const StepFunction& a, const StepFunction& b) {
    return (a - b).l1_norm();
}

double integrate_against(const Observable& phi, const StepFunction& g,
                         double quad_tol) {
    double s = 0.0;
    const auto& bp = g.breakpoints();
    const auto& val = g.values();
    for (size_t i = 0; i + 1 < bp.size(); ++i) {
        double v = val[i + 1];
        if (v == 0.0) continue;
        double lo = bp[i], hi = bp[i + 1];
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw std::runtime_error("integrate_against: non-finite support");
        if (phi.is_poly) {
            s += v * phi.poly.integral(lo, hi);
        } else {
            double piece = integrate_adaptive(
                [&](double x) {
                    double y = phi.fn(x);
                    if (!std::isfinite(y))
                        throw std::runtime_error(
                            "integrate_against: non-finite observable sample");
                    return y;
                },
                lo, hi, quad_tol);
            s += v * piece;
        }
    }
    return s;
}

StepFunction transfer_tent(const UnimodalMap& map, const StepFunction& g) {
    if (!map.linear_branches())
        throw std::domain_error(
            "transfer_tent: branches must be linear (use the Ulam operator)");
    if (g.empty()) return StepFunction();
    StepFunction out;
    const double c = map.turning_point();
    const auto& bp = g.breakpoints();
    const auto& val = g.values();

    auto add_branch = [&](const Branch& br, double dom_lo, double dom_hi) {
        const double w = 1.0 / std::abs(br.slope);
        std::vector<double> pts{dom_lo, dom_hi};
        for (double b : bp)
            if (b > dom_lo && b < dom_hi) pts.push_back(b);
        std::sort(pts.begin(), pts.end());
        std::vector<double> ibp;
        std::vector<double> ival;
        ival.push_back(0.0);
        bool increasing = br.slope > 0.0;
        if (increasing) {
            for (size_t i = 0; i < pts.size(); ++i) {
                ibp.push_back(br(pts[i]));
                if (i + 1 < pts.size())
                    ival.push_back(w * g(0.5 * (pts[i] + pts[i + 1])));
            }
            ival.push_back(0.0);
        } else {
            for (size_t i = pts.size(); i-- > 0;) {
                ibp.push_back(br(pts[i]));
                if (i > 0) ival.push_back(w * g(0.5 * (pts[i] + pts[i - 1])));
            }
            ival.push_back(0.0);
        }
        // guard against rounding-induced ties
        for (size_t i = 0; i + 1 < ibp.size(); ++i)
            if (!(ibp[i] < ibp[i + 1])) return; // degenerate domain sliver
        out += StepFunction(std::move(ibp), std::move(ival));
    };

    add_branch(map.branch_plus(), -1.0, c);
    add_branch(map.branch_minus(), c, 1.0);
    out.compress();
    return out;
}

double JumpMeasure::total_mass() const {
    double s = ac_part.integral();
    for (const auto& a : atoms) s += a.weight;
    return s;
}

JumpMeasure push_jump_measure(const CriticalOrbit& orbit,
                              const UnimodalMap& map, const JumpMeasure& mu,
                              int k) {
    if (k < 0) throw std::domain_error("push_jump_measure: k >= 0");
    JumpMeasure out;
    for (const auto& a : mu.atoms) {
        int j = a.orbit_index;
        if (j < 1 || size_t(j) > orbit.points.size() ||
            std::abs(orbit.points[j - 1] - a.position) > 1e-9)
            throw std::domain_error(
                "push_jump_measure: atom is not on the stored orbit");
        if (size_t(j + k) > orbit.points.size())
            throw std::domain_error(
                "push_jump_measure: orbit too short for the requested push");
        out.atoms.push_back({orbit.points[j + k - 1], a.weight, j + k});
    }
    out.ac_part = mu.ac_part;
    for (int i = 0; i < k; ++i) out.ac_part = transfer_tent(map, out.ac_part);
    return out;
}

} // namespace fracsus
