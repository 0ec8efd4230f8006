#ifndef FRACSUS_ULAM_HPP
#define FRACSUS_ULAM_HPP

#include "fracsus/maps.hpp"
#include "fracsus/stepfn.hpp"

#include <complex>
#include <tuple>
#include <vector>

namespace fracsus {

// Row-stochastic Ulam discretization of the transfer operator:
// M_ij = |cell_i ∩ f^{-1}(cell_j)| / |cell_i|.  Densities are cellwise
// values; the operator acts as (P rho)_j = sum_i rho_i m_i M_ij / m_j.
class UlamOperator {
  public:
    UlamOperator(const UnimodalMap& map, int n,
                 const std::vector<double>& extra_edges);

    int size() const { return int(edges_.size()) - 1; }
    const std::vector<double>& edges() const { return edges_; }
    double cell_width(int i) const { return edges_[i + 1] - edges_[i]; }

    std::vector<double> apply_density(const std::vector<double>& rho) const;
    std::vector<std::complex<double>>
    apply_density(const std::vector<std::complex<double>>& rho) const;

    double row_sum(int i) const;
    double integral(const std::vector<double>& rho) const;
    std::complex<double>
    integral(const std::vector<std::complex<double>>& rho) const;

    StepFunction to_step(const std::vector<double>& rho) const;
    std::vector<double> cell_averages(const StepFunction& g) const;

    // coordinate-format export (row, col, weight)
    std::vector<std::tuple<int, int, double>> triplets() const;

  private:
    std::vector<double> edges_;
    std::vector<int> row_ptr_, col_;
    std::vector<double> w_;
};

// Partition: n uniform cells augmented with c and the first orbit points
// c_1..c_J as cell endpoints.
UlamOperator ulam_matrix(const UnimodalMap& map, int n,
                         int augment_orbit_depth = 30);

struct SpectralData {
    std::vector<double> rho_vec; // fixed density, integrates to 1
    double kappa_hat = 0.0;      // modulus of the subleading eigenvalue
    double residual = 0.0;       // ||P rho - rho||_1
};

// Power iteration for the fixed density plus a subleading-eigenvalue
// estimate (dense solve for moderate n, deflated power iteration above).
SpectralData leading_density(const UlamOperator& P, double tol = 1e-12,
                             int max_iter = 20000,
                             bool want_kappa = true);

// Solve (I - z P) u = w by Neumann summation.  Requires a mean-zero w
// when |z| >= 1; diverging iterations raise a radius error.
std::vector<std::complex<double>>
resolvent_solve(const UlamOperator& P, std::complex<double> z,
                const std::vector<std::complex<double>>& w,
                double tol = 1e-12, int max_terms = 100000);

std::vector<double> resolvent_solve(const UlamOperator& P, double z,
                                    const std::vector<double>& w,
                                    double tol = 1e-12,
                                    int max_terms = 100000);

} // namespace fracsus

#endif
