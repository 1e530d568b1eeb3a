#pragma once

#include "hilbert/report.hpp"
#include "hilbert/special.hpp"

#include <cstdint>

namespace hilbert {

/// K(x, y) = x^α y^β / (x + y)^{α+β+1}: nonnegative and homogeneous of degree -1.
class HomogeneousKernel {
public:
    explicit HomogeneousKernel(KernelParams params) : params_(params) {}

    [[nodiscard]] KernelParams params() const noexcept { return params_; }
    [[nodiscard]] double decay() const noexcept { return params_.alpha + params_.beta + 1.0; }

    /// Requires x, y > 0.
    [[nodiscard]] double operator()(double x, double y) const;
    [[nodiscard]] double log_value(double x, double y) const;

private:
    KernelParams params_;
};

/// H(α,β)_{i,j} = i^α j^β / (i+j)^{α+β+1}, for i, j >= 1.
double h_entry(KernelParams params, std::uint64_t i, std::uint64_t j);
double log_h_entry(KernelParams params, std::uint64_t i, std::uint64_t j);

/// M(α,β)_{i,j} = C(i+j-2, j-1) B(i+1-α, j+1-β). Throws DomainError when a beta
/// argument is nonpositive.
double m_entry(KernelParams params, std::uint64_t i, std::uint64_t j);
double log_m_entry(KernelParams params, std::uint64_t i, std::uint64_t j);

/// Scans the diagonal i = 1..search_limit for the first index with
/// H(1-α, 1-β)_{i,i} > M(α,β)_{i,i}. Comparison is strict and on log values.
/// `threads` shards the index range (0 = hardware concurrency); the report is
/// the minimum failing index over all shards.
CheckReport compare_entrywise(KernelParams params, std::uint64_t search_limit, unsigned threads = 1);

} // namespace hilbert
