#ifndef FRACSUS_MAPS_HPP
#define FRACSUS_MAPS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace fracsus {

// One monotone branch of a unimodal map.  Linear branches carry exact
// slope/intercept so the transfer-operator algebra can stay exact.
struct Branch {
    std::function<double(double)> f;
    std::function<double(double)> df;
    bool linear = false;
    double slope = 0.0;
    double intercept = 0.0;

    double operator()(double x) const {
        return linear ? slope * x + intercept : f(x);
    }
    double deriv(double x) const { return linear ? slope : df(x); }
    // inverse on the branch (monotone); exact for linear branches
    double inverse(double y, double lo, double hi) const;

    static Branch make_linear(double slope, double intercept);
};

// Piecewise C^2 expanding unimodal map on I = [-1,1]: increasing branch
// on [-1,c], decreasing branch on [c,1].
class UnimodalMap {
  public:
    UnimodalMap(double c, Branch plus, Branch minus, bool validate = true);

    double turning_point() const { return c_; }
    const Branch& branch_plus() const { return plus_; }
    const Branch& branch_minus() const { return minus_; }

    double operator()(double x) const {
        return x <= c_ ? plus_(x) : minus_(x);
    }
    // one-sided derivative; x == c uses the increasing branch
    double deriv(double x) const {
        return x <= c_ ? plus_.deriv(x) : minus_.deriv(x);
    }
    double top() const { return plus_(c_); } // f(c)

    bool linear_branches() const { return plus_.linear && minus_.linear; }
    double min_slope() const; // min |f'| over sampled grid (exact if linear)

  private:
    void check() const;
    double c_;
    Branch plus_, minus_;
};

// Tent with |slope| lambda and c = 0: f(x) = lambda x + lambda - 1 + offset
// on [-1,0], reflected on [0,1].
UnimodalMap tent_map(double lambda, double offset = 0.0);

// One-parameter family t -> f_t with clamping radius eps1 and
// perturbation field v0 = d/dt f_t |_{t=0}.
struct MapFamily {
    enum class Kind { tent_fixed_slope, tent_varying_slope, general };

    Kind kind = Kind::general;
    double eps1 = 0.0;
    double lambda0 = 0.0;
    double t0 = 0.0;
    std::function<UnimodalMap(double)> rule; // unclamped parameter rule
    std::function<double(double)> v0;
    std::function<double(double)> X0; // empty if v0 != X0 o f0
    bool has_X0 = false;

    double clamp_t(double t) const {
        return t > eps1 ? eps1 : (t < -eps1 ? -eps1 : t);
    }
    UnimodalMap map_at(double t) const { return rule(clamp_t(t)); }
    UnimodalMap map_at_unclamped(double t) const { return rule(t); }
    UnimodalMap base() const { return rule(0.0); }
};

MapFamily make_tent_fixed_slope(double lambda0, double t0, double eps1);
MapFamily make_tent_varying_slope(double lambda0, double eps1);
MapFamily make_general(Branch plus, Branch minus, double c,
                       std::function<UnimodalMap(double)> rule, double eps1,
                       std::function<double(double)> v0,
                       std::function<double(double)> X0 = {});

// Postcritical orbit c_k = f^k(c), k = 1..K, with cumulative derivatives
// (f^{k-1})'(c_1) and the normalized jump weights sbar_k (s_1 kept
// symbolic as 1 until the density is normalized).
struct CriticalOrbit {
    std::vector<double> points;    // points[i] = c_{i+1}
    std::vector<double> cumderivs; // cumderivs[i] = (f^i)'(c_1), [0] = 1
    std::vector<int> signs;        // sign of cumderivs[i]
    std::vector<double> sbar;      // sbar[i] = 1 / cumderivs[i]
    int K = 0;
    bool periodic_flag = false;
    int preperiod = 0; // 1-based index of the first cycle point (if flagged)
    int period = 0;
    int distinct_points = 0; // N_f when the orbit closes, else K

    double lambda_min = 0.0; // min |f'| of the generating map
    double tail_bound(double norm_v = 1.0) const;
};

CriticalOrbit critical_orbit(const UnimodalMap& map, int K,
                             double tol_per = 1e-9);

// lambda_n(f): min over admissible branch compositions of |(f^n)'|.
double lambda_n_of_map(const UnimodalMap& m, int n, int x_samples = 33);

struct ExpansionStats {
    std::vector<double> lambda_n; // lambda_n[i] for n = i+1
    double Lambda_hat = 0.0;      // lambda_N^{1/N}
    bool good = false;
    double Lambda_family = 0.0; // the family constant Lambda
};

ExpansionStats expansion_stats(const MapFamily& family, int N,
                               int t_samples = 9);

} // namespace fracsus

#endif
