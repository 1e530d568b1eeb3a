#pragma once

#include "hilbert/kernels.hpp"
#include "hilbert/report.hpp"
#include "hilbert/series.hpp"
#include "hilbert/special.hpp"

#include <cstdint>
#include <vector>

namespace hilbert {

struct NormEstimate {
    double value = 0.0; ///< lower bound on the norm of the N x N truncation
    std::uint64_t truncation = 0;
    std::uint64_t iterations = 0;
    double residual = 0.0; ///< relative change of the quotient at the last step
    bool converged = false;
    std::vector<double> quotients; ///< ||A x_k||_p after each step
};

/// Bilinear form of the N x N truncation of H(α,β) against x_i = i^{-1/q},
/// y_j = j^{-1/p}, divided by Σ_{i<=N} 1/i. Requires α > -1/p, β > -1/q.
double test_vector_lower_bound(KernelParams params, ConjugateExponents exps, std::uint64_t N, unsigned threads = 1);

/// Nonlinear power iteration for the l^p operator norm of the N x N truncation
/// of H(α,β), started from x_i ∝ i^{-1/q}. The matrix is never stored.
NormEstimate power_iteration_lower_bound(KernelParams params, ConjugateExponents exps, std::uint64_t N,
                                         double tol = 1e-10, std::uint64_t max_iter = 10000, unsigned threads = 1);

enum class SchurSide { column, row };

std::string_view to_string(SchurSide side);

/// Weighted column (or row) sum of the Schur test at one index, compared
/// against k = best_constant.
struct SchurReport {
    SchurSide side = SchurSide::column;
    std::uint64_t index = 0;
    double certified_sum_upper = 0.0;
    double target_k = 0.0;
    bool pass = false;
    CertifiedValue enclosure; ///< enclosure of the unscaled series
    SeriesParams series;

    [[nodiscard]] CheckReport to_check() const;
};

/// Σ_i K(i,j) (i/j)^{-1/q} <= k, rewritten as j^{β+1/q} Σ_i i^λ/(i+j)^s with
/// λ = α - 1/q, s = α+β+1 and certified through the series module.
SchurReport schur_column_check(const HomogeneousKernel& kernel, ConjugateExponents exps, std::uint64_t j);

/// Σ_j K(i,j) (j/i)^{-1/p} <= k: the column check with (α,β,p) and (β,α,q) swapped.
SchurReport schur_row_check(const HomogeneousKernel& kernel, ConjugateExponents exps, std::uint64_t i);

} // namespace hilbert
