#pragma once

#include "hilbert/rational.hpp"
#include "hilbert/report.hpp"

#include <array>
#include <cstdint>

namespace hilbert {

/// Parameters of the series Σ_{m>=1} m^λ / (m+n)^s, convergent for s > λ+1.
struct SeriesParams {
    double lambda = 0.0;
    double s = 0.0;
    std::uint64_t n = 1;
};

enum class TailMethod {
    integral_comparison, // rigorous integral majorant of the tail
    none,                // bare partial sum, no tail accounted for
};

std::string_view to_string(TailMethod m);

/// Enclosure [lower, upper] of a series value.
struct CertifiedValue {
    double lower = 0.0;
    double upper = 0.0;
    std::uint64_t terms_summed = 0;
    TailMethod tail_method = TailMethod::none;

    [[nodiscard]] double width() const noexcept { return upper - lower; }
    [[nodiscard]] double midpoint() const noexcept { return 0.5 * (lower + upper); }
};

/// Encloses Σ_{m>=1} m^λ/(m+n)^s. Sums at least max(budget, 32n) terms (and past the
/// point where the summand is decreasing and convex) with compensated
/// extended-precision accumulation, then bounds the tail by the integral of a
/// closed-form majorant. Throws DivergenceError if s <= λ+1.
CertifiedValue certified_sum(const SeriesParams& params, std::uint64_t budget);

/// Plain partial sum Σ_{m=1}^{terms} (tail_method = none, lower = upper).
CertifiedValue partial_sum(const SeriesParams& params, std::uint64_t terms);

/// Σ m^λ/(m+n)^s <= B(λ+1, s-λ-1) n^{1+λ-s}. Requires λ > -1, s > λ+1.
/// The term budget is escalated until the enclosure decides the inequality.
CheckReport verify_beta_series_bound(const SeriesParams& params);

/// Σ m/(n+m)^s <= n^{2-s} / ((s-2)(s-1)). Requires s > 2.
CheckReport verify_linear_series_bound(double s, std::uint64_t n);

/// Upper enclosure of Σ m^λ/(m+n)^s, escalating the budget until
/// `upper <= target` is decided or the largest budget is reached.
CertifiedValue certified_sum_against(const SeriesParams& params, double target);

// ---------------------------------------------------------------------------
// Correction polynomials D_0..D_5(s, λ)

struct DPolyValue {
    int index = 0;
    ExactRational s;
    ExactRational lambda;
    ExactRational value;
};

/// Exact D_index(s, λ), index in 0..5. Throws DomainError for a pole (λ in {-1..-(index+1)}).
DPolyValue d_polynomial(int index, const ExactRational& s, const ExactRational& lambda);

/// Floating-point evaluation of the same transcription.
double d_polynomial(int index, double s, double lambda);

/// Σ_{i=0}^{5} D_i(s,λ) / (n+1)^{s+i}.
double d_polynomial_bound(const SeriesParams& params);

/// Evaluates all six D_i exactly on the grid λ = 1 + k·step <= 2 (k >= 1),
/// s = λ + 1 + m·step <= 5 (m >= 1) and reports any negative value.
CheckReport verify_region(const ExactRational& grid_step, unsigned threads = 1);

/// The same sweep with one report per D_i; each carries the exact minimum.
std::array<CheckReport, 6> verify_region_by_index(const ExactRational& grid_step, unsigned threads = 1);

// ---------------------------------------------------------------------------
// The summand f(t) = t^λ/(t+n)^s and the pieces of its second derivative.

struct FDerivatives {
    double f = 0.0;
    double f1 = 0.0; ///< f'
    double f2 = 0.0; ///< f'' = g + h
    double g = 0.0;
    double h = 0.0;
    double g1 = 0.0;
    double h1 = 0.0;
    double f3 = 0.0; ///< f'''
    double g3 = 0.0;
};

FDerivatives f_derivatives(const SeriesParams& params, double t);

/// r-th derivative of t^a (t+n)^{-b} at t > 0.
double power_ratio_derivative(double a, double b, double n, double t, int order);

/// r-th derivative of g (resp. h) at t.
double g_derivative(const SeriesParams& params, double t, int order);
double h_derivative(const SeriesParams& params, double t, int order);

/// ∫_0^1 f(t) dt by quadrature.
double head_integral(const SeriesParams& params);

/// Closed-form lower bound Σ_{i=0}^{5} (n+1)^{-(s+i)} Π_{j=1}^{i}(s+j-1) / Π_{j=1}^{i+1}(j+λ)
/// for ∫_0^1 f, obtained by repeated integration by parts.
double head_integral_lower_bound(const SeriesParams& params);

/// ∫_0^1 f - f(1)/2 + f'(1)/12 - f'''(1)/720 + g'''(1)/(720·42), with the
/// integral by quadrature. Nonnegativity of this quantity implies the beta bound.
double euler_maclaurin_margin(const SeriesParams& params);

/// Same quantity with ∫_0^1 f replaced by its closed-form lower bound; this is
/// what the D_i expand.
double euler_maclaurin_margin_lower(const SeriesParams& params);

struct EulerMaclaurinSides {
    double series = 0.0;           ///< midpoint of the certified enclosure
    double series_halfwidth = 0.0;
    double integral = 0.0;         ///< ∫_1^∞ f
    double boundary = 0.0;         ///< f(1)/2 - f'(1)/12
    double remainder = 0.0;        ///< -(1/2) ∫_1^∞ B_2({t}) f''(t) dt
    double quadrature_error = 0.0; ///< disagreement between two quadrature orders
};

/// Evaluates both sides of the Euler-Maclaurin identity
///   Σ f(k) = ∫_1^∞ f + f(1)/2 - f'(1)/12 - (1/2) ∫_1^∞ B_2({t}) f''(t) dt
/// with B_2(x) = x^2 - x + b2_constant, using `quad_points`-point Gauss-Legendre
/// panels. Passes when the discrepancy is at most 1e-8.
CheckReport euler_maclaurin_check(const SeriesParams& params, int quad_points, double b2_constant = 1.0 / 6.0);

EulerMaclaurinSides euler_maclaurin_sides(const SeriesParams& params, int quad_points, double b2_constant = 1.0 / 6.0);

/// Records the signs of g^{(r)} and h^{(r)} for r = 4, 6 on `samples` points in
/// [1, 1 + span]. Reported without a verdict.
CheckReport bracket_sign_survey(const SeriesParams& params, int samples, double span = 100.0);

} // namespace hilbert
