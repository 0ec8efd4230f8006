#include "fracsus/ulam.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fracsus {

UlamOperator::UlamOperator(const UnimodalMap& map, int n,
                           const std::vector<double>& extra_edges) {
    if (n < 16) throw std::domain_error("UlamOperator: need n >= 16");
    edges_.reserve(n + 1 + extra_edges.size() + 1);
    for (int i = 0; i <= n; ++i) edges_.push_back(-1.0 + 2.0 * i / n);
    edges_.push_back(map.turning_point());
    for (double e : extra_edges)
        if (e > -1.0 && e < 1.0) edges_.push_back(e);
    std::sort(edges_.begin(), edges_.end());
    // drop near-duplicate edges (sliver cells poison the row scaling)
    std::vector<double> dedup;
    for (double e : edges_)
        if (dedup.empty() || e - dedup.back() > 1e-11) dedup.push_back(e);
    dedup.front() = -1.0;
    dedup.back() = 1.0;
    edges_ = std::move(dedup);

    const int m = size();
    const double c = map.turning_point();
    row_ptr_.assign(m + 1, 0);

    auto locate = [&](double x) {
        auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
        int j = int(it - edges_.begin()) - 1;
        return std::min(std::max(j, 0), m - 1);
    };

    std::vector<std::pair<int, double>> row;
    for (int i = 0; i < m; ++i) {
        row.clear();
        double lo = edges_[i], hi = edges_[i + 1];
        const bool on_plus = hi <= c + 1e-15;
        const Branch& br = on_plus ? map.branch_plus() : map.branch_minus();
        double ylo = br(lo), yhi = br(hi);
        if (ylo > yhi) std::swap(ylo, yhi);
        int j0 = locate(ylo), j1 = locate(yhi);
        double cell = hi - lo;
        for (int j = j0; j <= j1; ++j) {
            double p = std::max(ylo, edges_[j]);
            double q = std::min(yhi, edges_[j + 1]);
            if (q <= p) continue;
            double xlen;
            if (br.linear) {
                xlen = (q - p) / std::abs(br.slope);
            } else {
                xlen = std::abs(br.inverse(q, lo, hi) - br.inverse(p, lo, hi));
            }
            row.emplace_back(j, xlen / cell);
        }
        double s = 0.0;
        for (auto& [j, wij] : row) s += wij;
        if (s <= 0.0)
            throw std::runtime_error("UlamOperator: empty row");
        for (auto& [j, wij] : row) {
            col_.push_back(j);
            w_.push_back(wij / s); // exact row-stochastic normalization
        }
        row_ptr_[i + 1] = int(col_.size());
    }
}

double UlamOperator::row_sum(int i) const {
    double s = 0.0;
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) s += w_[k];
    return s;
}

template <typename T>
static std::vector<T> apply_impl(const std::vector<double>& edges,
                                 const std::vector<int>& row_ptr,
                                 const std::vector<int>& col,
                                 const std::vector<double>& w,
                                 const std::vector<T>& rho) {
    const int m = int(edges.size()) - 1;
    std::vector<T> out(m, T{});
    for (int i = 0; i < m; ++i) {
        T mass = rho[i] * (edges[i + 1] - edges[i]);
        if (mass == T{}) continue;
        for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k)
            out[col[k]] += mass * w[k];
    }
    for (int j = 0; j < m; ++j) out[j] /= (edges[j + 1] - edges[j]);
    return out;
}

std::vector<double>
UlamOperator::apply_density(const std::vector<double>& rho) const {
    return apply_impl(edges_, row_ptr_, col_, w_, rho);
}

std::vector<std::complex<double>>
UlamOperator::apply_density(const std::vector<std::complex<double>>& rho) const {
    return apply_impl(edges_, row_ptr_, col_, w_, rho);
}

double UlamOperator::integral(const std::vector<double>& rho) const {
    double s = 0.0;
    for (int i = 0; i < size(); ++i) s += rho[i] * cell_width(i);
    return s;
}

std::complex<double>
UlamOperator::integral(const std::vector<std::complex<double>>& rho) const {
    std::complex<double> s = 0.0;
    for (int i = 0; i < size(); ++i) s += rho[i] * cell_width(i);
    return s;
}

StepFunction UlamOperator::to_step(const std::vector<double>& rho) const {
    std::vector<double> val(rho.size() + 2, 0.0);
    for (size_t i = 0; i < rho.size(); ++i) val[i + 1] = rho[i];
    return StepFunction(edges_, val);
}

std::vector<double> UlamOperator::cell_averages(const StepFunction& g) const {
    std::vector<double> out(size());
    for (int i = 0; i < size(); ++i)
        out[i] = g.integral(edges_[i], edges_[i + 1]) / cell_width(i);
    return out;
}

std::vector<std::tuple<int, int, double>> UlamOperator::triplets() const {
    std::vector<std::tuple<int, int, double>> t;
    t.reserve(w_.size());
    for (int i = 0; i < size(); ++i)
        for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
            t.emplace_back(i, col_[k], w_[k]);
    return t;
}

UlamOperator ulam_matrix(const UnimodalMap& map, int n,
                         int augment_orbit_depth) {
    std::vector<double> extra;
    if (augment_orbit_depth > 0) {
        try {
            CriticalOrbit orb = critical_orbit(map, augment_orbit_depth);
            extra = orb.points;
        } catch (const std::exception&) {
            // orbit near the turning point or escaping: plain uniform grid
        }
    }
    return UlamOperator(map, n, extra);
}

namespace {

double kappa_dense(const UlamOperator& P) {
    const int m = P.size();
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
    for (auto [i, j, w] : P.triplets()) M(i, j) = w;
    Eigen::EigenSolver<Eigen::MatrixXd> es(M, /*computeEigenvectors=*/false);
    double best = 0.0, second = 0.0;
    for (int i = 0; i < m; ++i) {
        double a = std::abs(es.eigenvalues()[i]);
        if (a > best) {
            second = best;
            best = a;
        } else if (a > second) {
            second = a;
        }
    }
    return second;
}

double kappa_power(const UlamOperator& P) {
    // growth rate of P^k restricted to mean-zero densities
    const int m = P.size();
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<double> v(m);
    for (double& x : v) x = U(rng);
    double mass = P.integral(v);
    for (int i = 0; i < m; ++i) v[i] -= mass / 2.0; // total length 2
    const int burn = 20, steps = 40;
    for (int k = 0; k < burn; ++k) v = P.apply_density(v);
    double n0 = 0.0;
    for (int i = 0; i < m; ++i) n0 += std::abs(v[i]) * P.cell_width(i);
    for (int k = 0; k < steps; ++k) v = P.apply_density(v);
    double n1 = 0.0;
    for (int i = 0; i < m; ++i) n1 += std::abs(v[i]) * P.cell_width(i);
    if (n0 <= 0.0 || n1 <= 0.0) return 0.0;
    return std::pow(n1 / n0, 1.0 / steps);
}

} // namespace

SpectralData leading_density(const UlamOperator& P, double tol, int max_iter,
                             bool want_kappa) {
    const int m = P.size();
    SpectralData sd;
    std::vector<double> rho(m, 0.5); // uniform probability density
    double res = 0.0;
    int it = 0;
    for (; it < max_iter; ++it) {
        std::vector<double> nxt = P.apply_density(rho);
        double mass = P.integral(nxt);
        for (double& x : nxt) x /= mass;
        res = 0.0;
        for (int i = 0; i < m; ++i)
            res += std::abs(nxt[i] - rho[i]) * P.cell_width(i);
        rho.swap(nxt);
        if (res < tol) break;
    }
    if (it == max_iter)
        throw std::runtime_error(
            "leading_density: power iteration failed to converge, residual " +
            std::to_string(res));
    // report the fixed-point defect, not the last increment
    std::vector<double> img = P.apply_density(rho);
    sd.residual = 0.0;
    for (int i = 0; i < m; ++i)
        sd.residual += std::abs(img[i] - rho[i]) * P.cell_width(i);
    for (int i = 0; i < m; ++i)
        if (rho[i] < 0.0) rho[i] = 0.0; // clip rounding dust
    double mass = P.integral(rho);
    for (double& x : rho) x /= mass;
    sd.rho_vec = std::move(rho);
    if (want_kappa)
        sd.kappa_hat = (m <= 1200) ? kappa_dense(P) : kappa_power(P);
    return sd;
}

std::vector<std::complex<double>>
resolvent_solve(const UlamOperator& P, std::complex<double> z,
                const std::vector<std::complex<double>>& w, double tol,
                int max_terms) {
    const int m = P.size();
    if (int(w.size()) != m)
        throw std::invalid_argument("resolvent_solve: size mismatch");
    double wnorm = 0.0;
    for (int i = 0; i < m; ++i) wnorm += std::abs(w[i]) * P.cell_width(i);
    if (std::abs(z) >= 1.0) {
        std::complex<double> mass = P.integral(w);
        if (std::abs(mass) > 1e-9 * (wnorm + 1e-300))
            throw std::domain_error(
                "resolvent_solve: singular system (|z| >= 1 needs mean-zero w)");
    }
    std::vector<std::complex<double>> u = w, term = w;
    double prev = wnorm;
    int grow = 0;
    for (int k = 1; k <= max_terms; ++k) {
        term = P.apply_density(term);
        for (auto& x : term) x *= z;
        double tn = 0.0;
        for (int i = 0; i < m; ++i) tn += std::abs(term[i]) * P.cell_width(i);
        for (int i = 0; i < m; ++i) u[i] += term[i];
        if (tn < tol * (wnorm + 1e-300)) return u;
        grow = (tn > prev) ? grow + 1 : 0;
        if (grow > 60)
            throw std::runtime_error(
                "resolvent_solve: Neumann iteration diverges (radius error)");
        prev = tn;
    }
    throw std::runtime_error("resolvent_solve: iteration cap reached");
}

std::vector<double> resolvent_solve(const UlamOperator& P, double z,
                                    const std::vector<double>& w, double tol,
                                    int max_terms) {
    std::vector<std::complex<double>> wc(w.begin(), w.end());
    auto uc = resolvent_solve(P, std::complex<double>(z, 0.0), wc, tol,
                              max_terms);
    std::vector<double> u(uc.size());
    for (size_t i = 0; i < uc.size(); ++i) u[i] = uc[i].real();
    return u;
}

} // namespace fracsus
