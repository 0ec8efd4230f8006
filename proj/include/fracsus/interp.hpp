#ifndef FRACSUS_INTERP_HPP
#define FRACSUS_INTERP_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fracsus {

// Shape-preserving piecewise-cubic interpolation (Fritsch-Carlson slopes).
class Pchip {
  public:
    Pchip() = default;
    Pchip(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        size_t n = x_.size();
        if (n < 2 || y_.size() != n)
            throw std::invalid_argument("Pchip: need >= 2 nodes");
        for (size_t i = 0; i + 1 < n; ++i)
            if (!(x_[i] < x_[i + 1]))
                throw std::invalid_argument("Pchip: nodes not increasing");
        d_.resize(n);
        std::vector<double> h(n - 1), s(n - 1);
        for (size_t i = 0; i + 1 < n; ++i) {
            h[i] = x_[i + 1] - x_[i];
            s[i] = (y_[i + 1] - y_[i]) / h[i];
        }
        if (n == 2) {
            d_[0] = d_[1] = s[0];
        } else {
            d_[0] = end_slope(h[0], h[1], s[0], s[1]);
            d_[n - 1] = end_slope(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
            for (size_t i = 1; i + 1 < n; ++i) {
                if (s[i - 1] * s[i] <= 0.0) {
                    d_[i] = 0.0;
                } else {
                    double w1 = 2.0 * h[i] + h[i - 1];
                    double w2 = h[i] + 2.0 * h[i - 1];
                    d_[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
                }
            }
        }
    }

    double operator()(double x) const {
        size_t i = locate(x);
        double h = x_[i + 1] - x_[i];
        double t = (x - x_[i]) / h;
        double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
        double h10 = t * (1 - t) * (1 - t);
        double h01 = t * t * (3 - 2 * t);
        double h11 = t * t * (t - 1);
        return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] +
               h11 * h * d_[i + 1];
    }

    double deriv(double x) const {
        size_t i = locate(x);
        double h = x_[i + 1] - x_[i];
        double t = (x - x_[i]) / h;
        double g00 = 6 * t * (t - 1) / h;
        double g10 = (3 * t - 1) * (t - 1);
        double g11 = t * (3 * t - 2);
        return g00 * (y_[i] - y_[i + 1]) + g10 * d_[i] + g11 * d_[i + 1];
    }

  private:
    static double end_slope(double h0, double h1, double s0, double s1) {
        double d = ((2 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
        if (d * s0 <= 0.0) return 0.0;
        if (s0 * s1 < 0.0 && std::abs(d) > 3.0 * std::abs(s0))
            return 3.0 * s0;
        return d;
    }
    size_t locate(double x) const {
        if (x <= x_.front()) return 0;
        if (x >= x_.back()) return x_.size() - 2;
        auto it = std::upper_bound(x_.begin(), x_.end(), x);
        return size_t(it - x_.begin()) - 1;
    }
    std::vector<double> x_, y_, d_;
};

} // namespace fracsus

#endif
