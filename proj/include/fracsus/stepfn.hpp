#ifndef FRACSUS_STEPFN_HPP
#define FRACSUS_STEPFN_HPP

#include "fracsus/maps.hpp"
#include "fracsus/poly.hpp"

#include <utility>
#include <vector>

namespace fracsus {

// Piecewise-constant function on [-1,1], zero outside its support.
// values.size() == breakpoints.size() + 1, with zero leading and trailing
// values.  The value at a breakpoint is the midpoint of the side limits.
class StepFunction {
  public:
    StepFunction() = default;
    StepFunction(std::vector<double> breakpoints, std::vector<double> values);

    static StepFunction zero() { return StepFunction(); }
    static StepFunction indicator(double a, double b, double value);
    // Heaviside jump H_u: -1 left of u, 0 right of u, -1/2 at u.
    static StepFunction heaviside(double u);

    bool empty() const { return bp_.empty(); }
    const std::vector<double>& breakpoints() const { return bp_; }
    const std::vector<double>& values() const { return val_; }

    double operator()(double x) const;
    double integral() const;
    double integral(double a, double b) const;
    double l1_norm() const;

    StepFunction& operator+=(const StepFunction& o);
    StepFunction& operator*=(double a);
    friend StepFunction operator+(StepFunction a, const StepFunction& b) {
        a += b;
        return a;
    }
    friend StepFunction operator-(StepFunction a, StepFunction b) {
        b *= -1.0;
        a += b;
        return a;
    }
    friend StepFunction operator*(double a, StepFunction g) {
        g *= a;
        return g;
    }

    // drop breakpoints with equal side values and merge breakpoints closer
    // than tol (defaults to the documented 1e-13 threshold)
    void compress(double tol = 1e-13);

    // value jump at breakpoint index i (right minus left)
    double jump_at(size_t i) const { return val_[i + 1] - val_[i]; }

  private:
    void canonicalize();
    std::vector<double> bp_;
    std::vector<double> val_;
};

double l1_distance(const StepFunction& a, const StepFunction& b);

// \int phi(x) g(x) dx; exact for polynomial observables, adaptive
// quadrature per piece otherwise.
double integrate_against(const Observable& phi, const StepFunction& g,
                         double quad_tol = 1e-12);

// Exact transfer-operator image for maps with linear branches
// (tents): (L g)(x) = sum over preimages y of g(y)/|f'(y)|.
StepFunction transfer_tent(const UnimodalMap& map, const StepFunction& g);

// Atoms at postcritical points plus an absolutely continuous part.
struct JumpMeasure {
    struct Atom {
        double position;
        double weight;
        int orbit_index; // 1-based index j with position == c_j
    };
    std::vector<Atom> atoms;
    StepFunction ac_part;
    double total_mass() const;
};

// L^k of the measure: atoms ride the orbit (L delta_{c_j} = delta_{c_{j+1}}),
// the ac part is pushed by the exact tent transfer.
JumpMeasure push_jump_measure(const CriticalOrbit& orbit,
                              const UnimodalMap& map, const JumpMeasure& mu,
                              int k);

} // namespace fracsus

#endif
