#include "hilbert/norms.hpp"

#include "hilbert/errors.hpp"
#include "parallel.hpp"
#include "format.hpp"
#include "quadrature.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace hilbert {

namespace {

using detail::fmt;

void require_norm_region(KernelParams params, ConjugateExponents exps) {
    if (!(params.alpha > -1.0 / exps.p())) throw DomainError("requires alpha > -1/p (alpha=" + fmt(params.alpha) + ", p=" + fmt(exps.p()) + ")");
    if (!(params.beta > -1.0 / exps.q())) throw DomainError("requires beta > -1/q (beta=" + fmt(params.beta) + ", q=" + fmt(exps.q()) + ")");
}

double hankel_dot(const double* d, const double* w, std::size_t len) {
    double acc = 0.0;
#pragma omp simd reduction(+ : acc)
    for (std::size_t k = 0; k < len; ++k) acc += d[k] * w[k];
    return acc;
}

// A_{ij} = row[i] col[j] diag[i+j] for 1 <= i, j <= N, stored 0-based in
// row/col and by i+j in diag.
struct FactorizedMatrix {
    std::vector<double> row;
    std::vector<double> col;
    std::vector<double> diag;

    FactorizedMatrix(std::uint64_t n, double row_exp, double col_exp, double decay) : row(n), col(n), diag(2 * n + 1, 0.0) {
        for (std::uint64_t i = 1; i <= n; ++i) {
            const double x = static_cast<double>(i);
            row[i - 1] = std::pow(x, row_exp);
            col[i - 1] = std::pow(x, col_exp);
        }
        for (std::uint64_t k = 2; k <= 2 * n; ++k) diag[k] = std::pow(static_cast<double>(k), -decay);
    }

    [[nodiscard]] std::size_t size() const noexcept { return row.size(); }

    // out_i = row[i] Σ_j diag[i+j] col[j] x_j
    void apply(const std::vector<double>& x, std::vector<double>& out, unsigned threads) const {
        std::vector<double> w(size());
        for (std::size_t j = 0; j < size(); ++j) w[j] = col[j] * x[j];
        sweep(row, w, out, threads);
    }

    // out_j = col[j] Σ_i diag[i+j] row[i] z_i
    void apply_transpose(const std::vector<double>& z, std::vector<double>& out, unsigned threads) const {
        std::vector<double> w(size());
        for (std::size_t i = 0; i < size(); ++i) w[i] = row[i] * z[i];
        sweep(col, w, out, threads);
    }

private:
    void sweep(const std::vector<double>& scale, const std::vector<double>& w, std::vector<double>& out, unsigned threads) const {
        out.resize(size());
        const std::size_t n = size();
        detail::parallel_map_ranges<int>(0, n, threads, [&](std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) out[i] = scale[i] * hankel_dot(diag.data() + i + 2, w.data(), n);
            return 0;
        });
    }
};

double lp_norm(const std::vector<double>& v, double p) {
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::fabs(x));
    if (peak == 0.0) return 0.0;
    detail::CompensatedSum<long double> acc;
    for (double x : v) acc.add(std::pow(std::fabs(x) / peak, p));
    return peak * static_cast<double>(std::pow(acc.value(), 1.0L / p));
}

void normalize(std::vector<double>& v, double p) {
    const double norm = lp_norm(v, p);
    for (double& x : v) x /= norm;
}

} // namespace

double test_vector_lower_bound(KernelParams params, ConjugateExponents exps, std::uint64_t N, unsigned threads) {
    require_norm_region(params, exps);
    if (N == 0) throw DomainError("truncation N must be positive");
    // Σ_{i,j} i^{α-1/q} j^{β-1/p} (i+j)^{-(α+β+1)}
    const FactorizedMatrix m(N, params.alpha - 1.0 / exps.q(), params.beta - 1.0 / exps.p(), params.alpha + params.beta + 1.0);
    const auto n = static_cast<std::size_t>(N);
    const auto partial = detail::parallel_map_ranges<long double>(0, N, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        detail::CompensatedSum<long double> acc;
        for (std::uint64_t i = lo; i < hi; ++i) acc.add(m.row[i] * hankel_dot(m.diag.data() + i + 2, m.col.data(), n));
        return acc.value();
    });
    detail::CompensatedSum<long double> total;
    for (long double v : partial) total.add(v);
    detail::CompensatedSum<long double> harmonic;
    for (std::uint64_t i = N; i >= 1; --i) harmonic.add(1.0L / static_cast<long double>(i));
    return static_cast<double>(total.value() / harmonic.value());
}

NormEstimate power_iteration_lower_bound(KernelParams params, ConjugateExponents exps, std::uint64_t N, double tol,
                                         std::uint64_t max_iter, unsigned threads) {
    if (N == 0) throw DomainError("truncation N must be positive");
    if (!(tol > 0.0)) throw DomainError("tol must be positive");
    if (max_iter == 0) throw DomainError("max_iter must be positive");
    const double p = exps.p();
    const double q = exps.q();
    const FactorizedMatrix m(N, params.alpha, params.beta, params.alpha + params.beta + 1.0);

    std::vector<double> x(N);
    for (std::uint64_t i = 0; i < N; ++i) x[i] = std::pow(static_cast<double>(i + 1), -1.0 / q);
    normalize(x, p);

    NormEstimate est;
    est.truncation = N;
    std::vector<double> y, z(N), u;
    m.apply(x, y, threads);
    double quotient = lp_norm(y, p);
    est.quotients.push_back(quotient);
    est.residual = 1.0;

    while (est.iterations < max_iter) {
        for (std::size_t i = 0; i < N; ++i) z[i] = std::pow(y[i], p - 1.0);
        m.apply_transpose(z, u, threads);
        for (std::size_t j = 0; j < N; ++j) x[j] = std::pow(u[j], q - 1.0);
        normalize(x, p);
        m.apply(x, y, threads);
        const double next = lp_norm(y, p);
        ++est.iterations;
        est.quotients.push_back(next);
        est.residual = std::fabs(next - quotient) / next;
        quotient = next;
        if (est.residual < tol) {
            est.converged = true;
            break;
        }
    }
    est.value = quotient;
    return est;
}

std::string_view to_string(SchurSide side) { return side == SchurSide::column ? "column" : "row"; }

CheckReport SchurReport::to_check() const {
    CheckReport r;
    r.name = std::string("schur_") + std::string(to_string(side)) + "_sum";
    r.verdict = pass ? Verdict::pass : Verdict::fail;
    r.lhs = certified_sum_upper;
    r.rhs = target_k;
    r.margin = target_k - certified_sum_upper;
    r.location = (side == SchurSide::column ? "j=" : "i=") + std::to_string(index);
    r.checked = enclosure.terms_summed;
    if (!pass) r.first_violation = Violation{r.location, r.lhs, r.rhs};
    return r;
}

namespace {

SchurReport schur_check(double a, double b, double p_weight, double k, SchurSide side, std::uint64_t index) {
    // Σ_m K(m, n) (m/n)^{-1/w} = n^{b+1/w} Σ_m m^{a-1/w} / (m+n)^{a+b+1}
    if (index == 0) throw DomainError("Schur index must be positive");
    SchurReport report;
    report.side = side;
    report.index = index;
    report.target_k = k;
    report.series = SeriesParams{a - 1.0 / p_weight, a + b + 1.0, index};
    const double scale = std::pow(static_cast<double>(index), b + 1.0 / p_weight);
    // Rounding of the scale and of k is absorbed by a relative slack of 1e-13.
    const double target = k / scale * (1.0 - 1e-13);
    report.enclosure = certified_sum_against(report.series, target);
    report.certified_sum_upper = report.enclosure.upper * scale;
    report.pass = report.enclosure.upper <= target;
    return report;
}

} // namespace

SchurReport schur_column_check(const HomogeneousKernel& kernel, ConjugateExponents exps, std::uint64_t j) {
    const KernelParams kp = kernel.params();
    const double k = best_constant(kp, exps);
    return schur_check(kp.alpha, kp.beta, exps.q(), k, SchurSide::column, j);
}

SchurReport schur_row_check(const HomogeneousKernel& kernel, ConjugateExponents exps, std::uint64_t i) {
    const KernelParams kp = kernel.params();
    const double k = best_constant(kp, exps);
    return schur_check(kp.beta, kp.alpha, exps.p(), k, SchurSide::row, i);
}

} // namespace hilbert
