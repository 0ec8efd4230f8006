#include "fracsus/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fracsus {

InvariantDensity saltus_density_tent(const CriticalOrbit& orbit, int K) {
    if (K < 2 || K > orbit.K)
        throw std::domain_error("saltus_density_tent: bad truncation depth");
    // jump events (c_k, weight sbar_k with s1 = 1), coinciding points merged
    std::vector<std::pair<double, double>> ev(size_t(K));
    for (int k = 0; k < K; ++k) ev[k] = {orbit.points[k], orbit.sbar[k]};
    std::sort(ev.begin(), ev.end());
    std::vector<double> pos;
    std::vector<double> wt;
    for (auto& [p, w] : ev) {
        if (!pos.empty() && p - pos.back() <= 1e-13) {
            wt.back() += w; // preperiodic orbits revisit the same jump
        } else {
            pos.push_back(p);
            wt.push_back(w);
        }
    }
    // value on (p_j, p_{j+1}) is -(suffix sum of weights), so the trailing
    // value is exactly zero
    size_t m = pos.size();
    std::vector<double> bp;
    bp.reserve(m + 1);
    bp.push_back(-1.0);
    for (double p : pos) bp.push_back(p);
    std::vector<double> val(m + 2, 0.0);
    double suffix = 0.0;
    for (size_t j = m; j-- > 0;) {
        suffix += wt[j];
        val[j + 1] = -suffix;
    }
    StepFunction unnorm(std::move(bp), std::move(val));
    double area = unnorm.integral();
    if (std::abs(area) < 1e-12)
        throw std::runtime_error(
            "saltus_density_tent: degenerate normalization (series integrates "
            "to zero)");
    double s1 = 1.0 / area;
    InvariantDensity d;
    d.sal = s1 * unnorm;
    d.reg = StepFunction::zero();
    d.s1 = s1;
    d.K = K;
    d.tail_bound = 2.0 * std::abs(s1) *
                   std::pow(orbit.lambda_min, -double(K)) /
                   (orbit.lambda_min - 1.0);
    return d;
}

InvariantDensity invariant_density_ulam(const MapFamily& family, double t,
                                        int n) {
    UnimodalMap ft = family.map_at(t);
    UlamOperator P = ulam_matrix(ft, n);
    SpectralData sd = leading_density(P, 1e-12, 20000, /*want_kappa=*/false);
    InvariantDensity d;
    d.sal = P.to_step(sd.rho_vec);
    d.reg = StepFunction::zero();
    d.s1 = 0.0;
    d.K = 0;
    d.tail_bound = 0.0;
    d.decomposed = false;
    return d;
}

} // namespace fracsus
