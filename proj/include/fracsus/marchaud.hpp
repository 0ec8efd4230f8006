#ifndef FRACSUS_MARCHAUD_HPP
#define FRACSUS_MARCHAUD_HPP

#include "fracsus/special.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace fracsus {

enum class Side { plus, minus, two_sided };

// Gamma_eta = eta / Gamma(1 - eta), the Marchaud normalization.
complex gamma_factor(complex eta);
double gamma_factor(double eta);

// Kernel of a Marchaud-type derivative.  `full` and `truncated` use the
// weight |t|^{-1-eta} with the Gamma_eta prefactor; `weighted` kernels
// replace the weight by 1/ell(t) and drop the prefactor.
class MarchaudKernel {
  public:
    enum class Variant { full, truncated, weighted };
    enum class WeightKind { power, power_log, zeta_log, custom };

    static MarchaudKernel full(complex eta);
    static MarchaudKernel truncated(complex eta, double eps1);

    Variant variant() const { return variant_; }
    WeightKind weight_kind() const { return wkind_; }
    complex eta() const { return eta_; }
    double eps1() const { return eps1_; }
    double beta() const { return beta_; }
    int log_power() const { return nlog_; }
    double certified_gamma() const { return gamma_; }

    // Gamma_eta for full/truncated kernels, 1 for weighted ones
    complex prefactor() const;
    // weight at t > 0: |t|^{-1-eta}, or 1/ell(t) (signed for zeta kernels)
    complex weight(double t) const;
    // \int_0^d t * weight(t) dt  (head model integral)
    complex head_moment1(double d) const;
    // \int_T^infty weight(t) dt  (exact frozen tail)
    complex tail_mass(double T) const;
    // upper t-limit of the kernel integral (eps1 when truncated)
    double upper_limit() const;

    friend MarchaudKernel kernel_power_log(double eta, double beta);
    friend MarchaudKernel zeta_log_kernel(complex eta0, int n, double eps1);

  private:
    MarchaudKernel() = default;
    Variant variant_ = Variant::full;
    WeightKind wkind_ = WeightKind::power;
    complex eta_{0.5, 0.0};
    double eps1_ = 0.0;
    double beta_ = 0.0;
    int nlog_ = 0;
    double gamma_ = 0.0;
    std::function<complex(double)> custom_;
};

// ell_{eta,beta}(t) = t^{1+eta} |min(-1, log t)|^beta with a numerical
// (hh) certification; beta > 1 is required at eta = 1.
MarchaudKernel kernel_power_log(double eta, double beta);

// ell_n(t) = |t|^{1+eta0} (log|t|)^{-n}, stored signed; used by the
// zeta-expansion of the holomorphic extension.  Domain-truncated at eps1.
MarchaudKernel zeta_log_kernel(complex eta0, int n, double eps1);

// Curve sample on a symmetric geometric t-grid (plus optional outer
// points); evaluation interpolates shape-preserving cubics in log|t|
// per side.
class SampledCurve {
  public:
    SampledCurve(std::vector<double> t, std::vector<double> g,
                 double holder_exponent = 1.0);
    static SampledCurve from_function(const std::function<double(double)>& f,
                                      double eps1, double q = 0.8,
                                      int per_side = 60,
                                      const std::vector<double>& outer = {});
    double operator()(double t) const;
    const std::vector<double>& grid() const { return t_; }
    const std::vector<double>& values() const { return g_; }
    double holder() const { return holder_; }
    double value_at_zero() const { return g0_; }
    double smallest_positive() const { return tmin_pos_; }

  private:
    struct SideInterp;
    std::vector<double> t_, g_;
    double holder_ = 1.0;
    double g0_ = 0.0, tmin_pos_ = 0.0, tmin_neg_ = 0.0;
    std::shared_ptr<const SideInterp> pos_, neg_;
};

struct MarchaudResult {
    complex value{0.0, 0.0};
    double error_estimate = 0.0;
};

struct MarchaudOptions {
    double t_max = 1000.0; // outer cutoff when no constant tail is declared
    double delta = 1e-7;   // analytic-head radius
    std::optional<double> const_beyond; // g constant for |t-t0| >= this
    std::vector<double> t_breaks;       // known kinks at |t-t0| offsets
    double quad_tol = 1e-11;
};

// Marchaud derivative of g at t0 for the given kernel and side.
MarchaudResult marchaud(const std::function<double(double)>& g, double t0,
                        const MarchaudKernel& kernel, Side side,
                        const MarchaudOptions& opt = {});

MarchaudResult marchaud(const SampledCurve& curve, double t0,
                        const MarchaudKernel& kernel, Side side,
                        MarchaudOptions opt = {});

// Closed forms for the Heaviside family H_t(x) (jump at the parameter):
// M^eta_t H_t(x)|_{t=u} = -1/(2 Gamma(1-eta)) |x-u|^{-eta}, x != u.
complex heaviside_closed(double x, double u, complex eta);

// Truncated variant: same value for 0 < |y-u| < eps1, zero beyond
// (the boundary |y-u| = eps1 returns zero).
complex heaviside_truncated_closed(double y, double u, complex eta,
                                   double eps1);

} // namespace fracsus

#endif
