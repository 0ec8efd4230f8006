#ifndef FRACSUS_DENSITY_HPP
#define FRACSUS_DENSITY_HPP

#include "fracsus/maps.hpp"
#include "fracsus/stepfn.hpp"
#include "fracsus/ulam.hpp"

namespace fracsus {

struct InvariantDensity {
    StepFunction sal;        // saltus part (whole density when undecomposed)
    StepFunction reg;        // regular part; identically zero for tents
    double s1 = 0.0;         // normalization weight of the leading jump
    int K = 0;               // series truncation
    double tail_bound = 0.0; // L1 bound on the dropped terms
    bool decomposed = true;  // false for Ulam densities

    StepFunction total() const { return sal + reg; }
};

// Invariant density of a tent map as the truncated jump series
// rho = sum_{k<=K} sbar_k H_{c_k}, normalized to integrate to one.
// The regular part vanishes identically in this case.
InvariantDensity saltus_density_tent(const CriticalOrbit& orbit, int K);

// Ulam route for arbitrary parameters (clamped inside the family).
InvariantDensity invariant_density_ulam(const MapFamily& family, double t,
                                        int n);

} // namespace fracsus

#endif
