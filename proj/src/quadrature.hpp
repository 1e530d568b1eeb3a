#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hilbert::detail {

/// Gauss-Legendre rule with a runtime number of points, nodes computed by
/// Newton iteration on P_n in extended precision.
class GaussLegendre {
public:
    explicit GaussLegendre(int points) {
        if (points < 1) throw std::invalid_argument("Gauss-Legendre rule needs at least one point");
        nodes_.resize(static_cast<std::size_t>(points));
        weights_.resize(static_cast<std::size_t>(points));
        const int n = points;
        const int half = (n + 1) / 2;
        for (int i = 0; i < half; ++i) {
            long double z = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
            long double dp = 0.0L;
            for (int iter = 0; iter < 100; ++iter) {
                long double p0 = 1.0L;
                long double p1 = 0.0L;
                for (int k = 1; k <= n; ++k) {
                    const long double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0L * k - 1.0L) * z * p1 - (k - 1.0L) * p2) / k;
                }
                dp = n * (z * p0 - p1) / (z * z - 1.0L);
                const long double dz = p0 / dp;
                z -= dz;
                if (std::fabs(dz) < 1e-19L) break;
            }
            const long double w = 2.0L / ((1.0L - z * z) * dp * dp);
            nodes_[static_cast<std::size_t>(i)] = -z;
            nodes_[static_cast<std::size_t>(n - 1 - i)] = z;
            weights_[static_cast<std::size_t>(i)] = w;
            weights_[static_cast<std::size_t>(n - 1 - i)] = w;
        }
    }

    template <class Fn>
    long double integrate(Fn&& fn, long double a, long double b) const {
        const long double mid = 0.5L * (a + b);
        const long double half = 0.5L * (b - a);
        long double sum = 0.0L;
        for (std::size_t k = 0; k < nodes_.size(); ++k) sum += weights_[k] * fn(mid + half * nodes_[k]);
        return sum * half;
    }

    [[nodiscard]] int points() const noexcept { return static_cast<int>(nodes_.size()); }

private:
    std::vector<long double> nodes_;
    std::vector<long double> weights_;
};

/// Neumaier-compensated accumulator.
template <class Real>
class CompensatedSum {
public:
    void add(Real x) noexcept {
        const Real t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] Real value() const noexcept { return sum_ + comp_; }

private:
    Real sum_{0};
    Real comp_{0};
};

} // namespace hilbert::detail
