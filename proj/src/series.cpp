#include "hilbert/series.hpp"

#include "d_polynomials.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/special.hpp"
#include "parallel.hpp"
#include "format.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hilbert {

namespace {

constexpr double kUnitRoundoff = 0x1p-53;
// Relative uncertainty allowed for a right-hand side built from beta() and pow().
constexpr double kRhsRelativeSlack = 1e-13;
constexpr long double kDPolyDenominator = 720.0L * 42.0L;

using detail::fmt;

std::string series_location(const SeriesParams& p) {
    return "lambda=" + fmt(p.lambda) + ",s=" + fmt(p.s) + ",n=" + std::to_string(p.n);
}

void require_convergent(const SeriesParams& p) {
    if (!std::isfinite(p.lambda) || !std::isfinite(p.s)) throw DomainError("series parameters must be finite");
    if (p.n == 0) throw DomainError("series shift n must be a positive integer");
    if (!(p.s > p.lambda + 1.0)) {
        throw DivergenceError("series diverges: requires s > lambda + 1 (s=" + fmt(p.s) + ", lambda=" + fmt(p.lambda) + ")");
    }
}

double term(double m, double lambda, double s, double n) { return std::pow(m, lambda) / std::pow(m + n, s); }

// Smallest t beyond which t^λ/(t+n)^s is both decreasing and convex.
long double regular_tail_start(const SeriesParams& p) {
    const long double lam = p.lambda;
    const long double s = p.s;
    const long double n = static_cast<long double>(p.n);
    const long double decreasing = lam > 0.0L ? lam * n / (s - lam) : 0.0L;
    // f'' = t^{λ-2} (t+n)^{-s-2} [A u^2 - 2 n s(s+1-λ) u + n^2 s(s+1)], u = t + n.
    const long double a = (s + 1.0L - lam) * (s - lam);
    const long double b = s * (s + 1.0L - lam);
    const long double disc = b * b - a * s * (s + 1.0L);
    long double convex = 0.0L;
    if (disc > 0.0L) convex = std::max(0.0L, n * (b + std::sqrt(disc)) / a - n);
    return std::max(decreasing, convex);
}

// ∫_T^∞ of a majorant of t^λ/(t+n)^s, together with a bound on its rounding error.
struct TailIntegral {
    long double value;
    long double rounding;
};

TailIntegral tail_majorant_integral(const SeriesParams& p, long double t0) {
    const long double lam = p.lambda;
    const long double s = p.s;
    const long double n = static_cast<long double>(p.n);
    const long double head = std::pow(t0, lam + 1.0L - s) / (s - lam - 1.0L);
    if (s <= 0.0L) {
        // (t+n)^{-s} <= (1 + n/T)^{-s} t^{-s} for t >= T when s <= 0.
        const long double v = std::pow(1.0L + n / t0, -s) * head;
        return {v, 1e-15L * v};
    }
    // (1+x)^{-s} <= 1 - s x + s(s+1) x^2 / 2 for x >= 0, s > 0.
    const long double first = s * n * std::pow(t0, lam - s) / (s - lam);
    const long double second = s * (s + 1.0L) * n * n * std::pow(t0, lam - 1.0L - s) / (2.0L * (s + 1.0L - lam));
    return {head - first + second, 1e-15L * (head + first + second)};
}

// ∫_T^∞ of a minorant of t^λ/(t+n)^s.
long double tail_minorant_integral(const SeriesParams& p, long double t0) {
    const long double lam = p.lambda;
    const long double s = p.s;
    const long double n = static_cast<long double>(p.n);
    const long double head = std::pow(t0, lam + 1.0L - s) / (s - lam - 1.0L);
    if (s <= 0.0L) return head;
    // (1+x)^{-s} >= 1 - s x + s(s+1) x^2/2 - s(s+1)(s+2) x^3/6 for x >= 0.
    const long double v = head - s * n * std::pow(t0, lam - s) / (s - lam) +
                          s * (s + 1.0L) * n * n * std::pow(t0, lam - 1.0L - s) / (2.0L * (s + 1.0L - lam)) -
                          s * (s + 1.0L) * (s + 2.0L) * n * n * n * std::pow(t0, lam - 2.0L - s) / (6.0L * (s + 2.0L - lam));
    return std::max(0.0L, v * (1.0L - 1e-15L));
}

long double partial_sum_ld(const SeriesParams& p, std::uint64_t terms) {
    detail::CompensatedSum<long double> acc;
    const double n = static_cast<double>(p.n);
    for (std::uint64_t m = 1; m <= terms; ++m) acc.add(term(static_cast<double>(m), p.lambda, p.s, n));
    return acc.value();
}

double round_down(long double v) {
    const auto d = static_cast<double>(v);
    return std::nextafter(d, -std::numeric_limits<double>::infinity());
}

double round_up(long double v) {
    const auto d = static_cast<double>(v);
    return std::nextafter(d, std::numeric_limits<double>::infinity());
}

CheckReport decide_upper_bound(std::string name, const SeriesParams& p, double rhs) {
    const CertifiedValue cv = certified_sum_against(p, rhs * (1.0 - kRhsRelativeSlack));
    CheckReport report;
    report.name = std::move(name);
    report.lhs = cv.upper;
    report.rhs = rhs;
    report.margin = rhs - cv.upper;
    report.location = series_location(p);
    report.checked = cv.terms_summed;
    if (cv.upper <= rhs * (1.0 - kRhsRelativeSlack)) {
        report.verdict = Verdict::pass;
    } else if (cv.lower > rhs * (1.0 + kRhsRelativeSlack)) {
        report.verdict = Verdict::fail;
        report.first_violation = Violation{report.location, cv.lower, rhs};
    } else {
        report.verdict = Verdict::inconclusive;
        report.note = "enclosure [" + fmt(cv.lower) + ", " + fmt(cv.upper) + "] straddles the bound";
    }
    return report;
}

} // namespace

std::string_view to_string(TailMethod m) {
    switch (m) {
    case TailMethod::integral_comparison: return "integral-comparison";
    case TailMethod::none: return "none";
    }
    return "unknown";
}

CertifiedValue partial_sum(const SeriesParams& params, std::uint64_t terms) {
    if (params.n == 0) throw DomainError("series shift n must be a positive integer");
    const long double sum = partial_sum_ld(params, terms);
    const auto d = static_cast<double>(sum);
    return {d, d, terms, TailMethod::none};
}

CertifiedValue certified_sum(const SeriesParams& params, std::uint64_t budget) {
    require_convergent(params);
    if (budget == 0) throw DomainError("certified_sum budget must be positive");

    const long double start = regular_tail_start(params);
    // The tail bounds expand (1 + n/t)^{-s}; keep n/t <= 1/32.
    std::uint64_t terms = std::max<std::uint64_t>(budget, 32 * params.n);
    if (start + 1.0L > static_cast<long double>(terms)) terms = static_cast<std::uint64_t>(std::ceil(start)) + 1;

    const long double sum = partial_sum_ld(params, terms);
    // Each summand carries <= 3 ulp (two pow calls and a division); the
    // compensated long double accumulation adds far less than one more.
    const long double sum_rounding = 4.0L * kUnitRoundoff * sum;

    // f is convex on [terms + 1/2, ∞), so f(m) <= ∫_{m-1/2}^{m+1/2} f and the
    // tail Σ_{m > terms} f(m) is bounded by ∫_{terms+1/2}^∞ f.
    const TailIntegral tail = tail_majorant_integral(params, static_cast<long double>(terms) + 0.5L);
    // Convexity also gives ∫_m^{m+1} f <= (f(m) + f(m+1))/2, hence
    // Σ_{m > terms} f(m) >= ∫_{terms+1}^∞ f + f(terms+1)/2.
    const auto next = static_cast<double>(terms + 1);
    const long double tail_low = tail_minorant_integral(params, static_cast<long double>(terms) + 1.0L) +
                                 0.5L * term(next, params.lambda, params.s, static_cast<double>(params.n)) * (1.0L - 1e-15L);

    CertifiedValue out;
    out.lower = std::max(0.0, round_down(sum - sum_rounding + tail_low));
    out.upper = round_up(sum + sum_rounding + tail.value + tail.rounding);
    out.terms_summed = terms;
    out.tail_method = TailMethod::integral_comparison;
    return out;
}

CertifiedValue certified_sum_against(const SeriesParams& params, double target) {
    require_convergent(params);
    constexpr std::uint64_t kMaxBudget = std::uint64_t{1} << 27;
    std::uint64_t budget = std::max<std::uint64_t>(4096, 32 * params.n);
    CertifiedValue cv = certified_sum(params, budget);
    while (cv.upper > target && cv.lower <= target && budget < kMaxBudget) {
        budget = std::min(kMaxBudget, budget * 8);
        cv = certified_sum(params, budget);
    }
    return cv;
}

CheckReport verify_beta_series_bound(const SeriesParams& params) {
    if (!(params.lambda > -1.0)) throw DomainError("beta series bound requires lambda > -1 (lambda=" + fmt(params.lambda) + ")");
    require_convergent(params);
    const double rhs =
        beta(params.lambda + 1.0, params.s - params.lambda - 1.0) * std::pow(static_cast<double>(params.n), 1.0 + params.lambda - params.s);
    return decide_upper_bound("beta_series_bound", params, rhs);
}

CheckReport verify_linear_series_bound(double s, std::uint64_t n) {
    if (!(s > 2.0) || !std::isfinite(s)) throw DomainError("linear series bound requires s > 2 (s=" + fmt(s) + ")");
    if (n == 0) throw DomainError("series shift n must be a positive integer");
    const double rhs = std::pow(static_cast<double>(n), 2.0 - s) / ((s - 2.0) * (s - 1.0));
    return decide_upper_bound("linear_series_bound", SeriesParams{1.0, s, n}, rhs);
}

// ---------------------------------------------------------------------------

DPolyValue d_polynomial(int index, const ExactRational& s, const ExactRational& lambda) {
    if (index < 0 || index > 5) throw DomainError("D-polynomial index must lie in 0..5, got " + std::to_string(index));
    for (int k = 1; k <= index + 1; ++k) {
        if (lambda == ExactRational(-k)) throw DomainError("D_" + std::to_string(index) + " has a pole at lambda=" + std::to_string(-k));
    }
    return {index, s, lambda, detail::d_polynomial_impl<ExactRational>(index, s, lambda)};
}

double d_polynomial(int index, double s, double lambda) {
    if (index < 0 || index > 5) throw DomainError("D-polynomial index must lie in 0..5, got " + std::to_string(index));
    for (int k = 1; k <= index + 1; ++k) {
        if (lambda == -static_cast<double>(k)) throw DomainError("D_" + std::to_string(index) + " has a pole at lambda=" + std::to_string(-k));
    }
    return detail::d_polynomial_impl<double>(index, s, lambda);
}

double d_polynomial_bound(const SeriesParams& params) {
    const double base = static_cast<double>(params.n) + 1.0;
    double total = 0.0;
    for (int i = 0; i <= 5; ++i) total += d_polynomial(i, params.s, params.lambda) / std::pow(base, params.s + i);
    return total;
}

namespace {

struct RegionPoint {
    ExactRational value;
    ExactRational lambda;
    ExactRational s;
};

struct RegionShard {
    std::array<std::optional<RegionPoint>, 6> minima;
    std::array<std::optional<RegionPoint>, 6> first_violation;
    std::uint64_t points = 0;
};

} // namespace

std::array<CheckReport, 6> verify_region_by_index(const ExactRational& grid_step, unsigned threads) {
    if (grid_step.sign() <= 0) throw DomainError("grid_step must be positive");
    const ExactRational one(1);
    const ExactRational two(2);
    const ExactRational five(5);

    std::uint64_t lambda_count = 0;
    while (one + ExactRational(static_cast<long>(lambda_count + 1)) * grid_step <= two) ++lambda_count;

    auto sweep = [&](std::uint64_t k_begin, std::uint64_t k_end) {
        RegionShard shard;
        for (std::uint64_t k = k_begin; k < k_end; ++k) {
            const ExactRational lambda = one + ExactRational(static_cast<long>(k + 1)) * grid_step;
            for (ExactRational s = lambda + one + grid_step; s <= five; s += grid_step) {
                ++shard.points;
                for (std::size_t i = 0; i < 6; ++i) {
                    ExactRational v = detail::d_polynomial_impl<ExactRational>(static_cast<int>(i), s, lambda);
                    if (v.sign() < 0 && !shard.first_violation[i]) shard.first_violation[i] = RegionPoint{v, lambda, s};
                    auto& m = shard.minima[i];
                    if (!m || v < m->value) m = RegionPoint{std::move(v), lambda, s};
                }
            }
        }
        return shard;
    };

    const auto shards = detail::parallel_map_ranges<RegionShard>(0, lambda_count, threads, sweep);

    std::uint64_t points = 0;
    for (const auto& sh : shards) points += sh.points;

    std::array<CheckReport, 6> reports;
    for (std::size_t i = 0; i < 6; ++i) {
        std::optional<RegionPoint> minimum;
        std::optional<RegionPoint> violation;
        // Shards are contiguous in λ and in order, so the first shard with a
        // violation holds the lexicographically smallest (λ, s) one.
        for (const auto& sh : shards) {
            if (sh.minima[i] && (!minimum || sh.minima[i]->value < minimum->value)) minimum = sh.minima[i];
            if (!violation && sh.first_violation[i]) violation = sh.first_violation[i];
        }

        auto& r = reports[i];
        r.name = "D" + std::to_string(i) + "_nonnegative";
        r.checked = points;
        if (!minimum) {
            r.note = "empty grid";
            continue;
        }
        r.lhs = 0.0;
        r.rhs = minimum->value.to_double();
        r.margin = r.rhs;
        r.location = "lambda=" + minimum->lambda.str() + ",s=" + minimum->s.str();
        r.note = "exact minimum " + minimum->value.str();
        if (violation) {
            r.verdict = Verdict::fail;
            r.first_violation = Violation{"lambda=" + violation->lambda.str() + ",s=" + violation->s.str(), 0.0,
                                          violation->value.to_double()};
        }
    }
    return reports;
}

CheckReport verify_region(const ExactRational& grid_step, unsigned threads) {
    const auto per_index = verify_region_by_index(grid_step, threads);
    CheckReport report;
    report.name = "d_polynomials_nonnegative";
    report.checked = per_index[0].checked;
    const CheckReport* tightest = nullptr;
    for (const auto& r : per_index) {
        if (r.location.empty()) continue;
        if (tightest == nullptr || r.rhs < tightest->rhs) tightest = &r;
        if (r.verdict == Verdict::fail && !report.first_violation) {
            report.verdict = Verdict::fail;
            report.first_violation = Violation{r.name + " at " + r.first_violation->location, 0.0, r.first_violation->rhs};
        }
    }
    if (tightest != nullptr) {
        report.lhs = 0.0;
        report.rhs = tightest->rhs;
        report.margin = tightest->rhs;
        report.location = tightest->name + " at " + tightest->location;
    }
    report.note = std::to_string(report.checked) + " grid points, step " + grid_step.str();
    return report;
}

// ---------------------------------------------------------------------------

double power_ratio_derivative(double a, double b, double n, double t, int order) {
    if (!(t > 0.0)) throw DomainError("derivatives of t^a (t+n)^-b require t > 0");
    if (order < 0) throw DomainError("derivative order must be nonnegative");
    // Leibniz rule on t^a · (t+n)^{-b}.
    long double total = 0.0L;
    long double binom = 1.0L;
    for (int k = 0; k <= order; ++k) {
        const int j = order - k; // derivatives falling on t^a
        long double falling = 1.0L;
        for (int r = 0; r < j; ++r) falling *= static_cast<long double>(a) - r;
        long double rising = 1.0L;
        for (int r = 0; r < k; ++r) rising *= static_cast<long double>(b) + r;
        const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
        total += binom * falling * sign * rising * std::pow(static_cast<long double>(t), static_cast<long double>(a) - j) *
                 std::pow(static_cast<long double>(t) + n, -static_cast<long double>(b) - k);
        binom = binom * (order - k) / (k + 1);
    }
    return static_cast<double>(total);
}

double g_derivative(const SeriesParams& p, double t, int order) {
    const double n = static_cast<double>(p.n);
    const double a = (p.s + 1.0 - p.lambda) * (p.s - p.lambda);
    return a * power_ratio_derivative(p.lambda - 2.0, p.s, n, t, order) +
           n * n * p.s * (p.s + 1.0) * power_ratio_derivative(p.lambda - 2.0, p.s + 2.0, n, t, order);
}

double h_derivative(const SeriesParams& p, double t, int order) {
    const double n = static_cast<double>(p.n);
    return -2.0 * n * p.s * (p.s + 1.0 - p.lambda) * power_ratio_derivative(p.lambda - 2.0, p.s + 1.0, n, t, order);
}

FDerivatives f_derivatives(const SeriesParams& p, double t) {
    if (!(t > 0.0)) throw DomainError("f_derivatives requires t > 0");
    const double n = static_cast<double>(p.n);
    const double s = p.s;
    const double lam = p.lambda;
    const double u = t + n;
    FDerivatives d;
    d.f = std::pow(t, lam) / std::pow(u, s);
    d.f1 = n * s * std::pow(t, lam - 1.0) / std::pow(u, s + 1.0) - (s - lam) * std::pow(t, lam - 1.0) / std::pow(u, s);
    d.g = (s + 1.0 - lam) * (s - lam) * std::pow(t, lam - 2.0) / std::pow(u, s) +
          n * n * s * (s + 1.0) * std::pow(t, lam - 2.0) / std::pow(u, s + 2.0);
    d.h = -2.0 * n * s * (s + 1.0 - lam) * std::pow(t, lam - 2.0) / std::pow(u, s + 1.0);
    d.f2 = d.g + d.h;
    d.g1 = g_derivative(p, t, 1);
    d.h1 = h_derivative(p, t, 1);
    d.f3 = power_ratio_derivative(lam, s, n, t, 3);
    d.g3 = g_derivative(p, t, 3);
    return d;
}

double head_integral(const SeriesParams& p) {
    if (!(p.lambda > -1.0)) throw DomainError("head integral requires lambda > -1");
    if (p.n == 0) throw DomainError("series shift n must be a positive integer");
    static const detail::GaussLegendre rule(24);
    const long double lam = p.lambda;
    const long double s = p.s;
    const long double n = static_cast<long double>(p.n);
    auto f = [&](long double t) { return std::pow(t, lam) * std::pow(t + n, -s); };
    // Dyadic panels [2^{-k-1}, 2^{-k}] resolve the t^λ behaviour at 0.
    constexpr int kPanels = 96;
    long double total = 0.0L;
    long double hi = 1.0L;
    for (int k = 0; k < kPanels; ++k) {
        const long double lo = 0.5L * hi;
        total += rule.integrate(f, lo, hi);
        hi = lo;
    }
    // ∫_0^ε t^λ (t+n)^{-s} dt = ε^{λ+1} n^{-s} / (λ+1) · (1 + O(ε)).
    total += std::pow(hi, lam + 1.0L) * std::pow(n, -s) / (lam + 1.0L);
    return static_cast<double>(total);
}

double head_integral_lower_bound(const SeriesParams& p) {
    const long double lam = p.lambda;
    const long double s = p.s;
    const long double base = static_cast<long double>(p.n) + 1.0L;
    long double total = 0.0L;
    long double numer = 1.0L;                 // Π_{j=1}^{i} (s+j-1)
    long double denom = 1.0L + lam;           // Π_{j=1}^{i+1} (j+λ)
    for (int i = 0; i <= 5; ++i) {
        total += numer / denom / std::pow(base, s + i);
        numer *= s + i;
        denom *= (i + 2) + lam;
    }
    return static_cast<double>(total);
}

namespace {

double em_margin_with_head(const SeriesParams& p, double head) {
    const FDerivatives d = f_derivatives(p, 1.0);
    return static_cast<double>(static_cast<long double>(head) - 0.5L * d.f + d.f1 / 12.0L - d.f3 / 720.0L +
                               d.g3 / kDPolyDenominator);
}

} // namespace

double euler_maclaurin_margin(const SeriesParams& params) { return em_margin_with_head(params, head_integral(params)); }

double euler_maclaurin_margin_lower(const SeriesParams& params) {
    return em_margin_with_head(params, head_integral_lower_bound(params));
}

namespace {

// ∫_1^∞ t^λ/(t+n)^s on dyadic panels plus an asymptotic tail beyond 2^48.
long double integral_from_one(const SeriesParams& p, const detail::GaussLegendre& rule) {
    const long double lam = p.lambda;
    const long double s = p.s;
    const long double n = static_cast<long double>(p.n);
    auto f = [&](long double t) { return std::pow(t, lam) * std::pow(t + n, -s); };
    constexpr int kPanels = 48;
    long double total = 0.0L;
    long double lo = 1.0L;
    for (int k = 0; k < kPanels; ++k) {
        total += rule.integrate(f, lo, 2.0L * lo);
        lo *= 2.0L;
    }
    // t^λ (t+n)^{-s} = Σ_j C(-s, j) n^j t^{λ-s-j}; integrate termwise from T = 2^48.
    long double coeff = 1.0L;
    for (int j = 0; j < 6; ++j) {
        total += coeff * std::pow(n, static_cast<long double>(j)) * std::pow(lo, lam - s - j + 1.0L) / (s + j - lam - 1.0L);
        coeff *= (-s - j) / (j + 1.0L);
    }
    return total;
}

long double f_second(const SeriesParams& p, long double t) {
    const long double lam = p.lambda;
    const long double s = p.s;
    const long double n = static_cast<long double>(p.n);
    const long double u = t + n;
    const long double bracket =
        (s + 1.0L - lam) * (s - lam) * u * u - 2.0L * n * s * (s + 1.0L - lam) * u + n * n * s * (s + 1.0L);
    return std::pow(t, lam - 2.0L) * std::pow(u, -s - 2.0L) * bracket;
}

// -(1/2) ∫_1^∞ B_2({t}) f''(t) dt with B_2(x) = x^2 - x + c.
long double bernoulli_remainder(const SeriesParams& p, const detail::GaussLegendre& rule, double c) {
    constexpr std::uint64_t kUnitPanels = 1u << 12;
    long double total = 0.0L;
    for (std::uint64_t k = 1; k < kUnitPanels; ++k) {
        const auto left = static_cast<long double>(k);
        total += rule.integrate(
            [&](long double t) {
                const long double x = t - left;
                return (x * x - x + c) * f_second(p, t);
            },
            left, left + 1.0L);
    }
    // Past the unit panels only the mean (c - 1/6) of B_2({t}) contributes
    // materially; the zero-mean part is O(f''(K)).
    const long double mean = static_cast<long double>(c) - 1.0L / 6.0L;
    if (mean != 0.0L) total -= mean * f_derivatives(p, static_cast<double>(kUnitPanels)).f1;
    return -0.5L * total;
}

} // namespace

EulerMaclaurinSides euler_maclaurin_sides(const SeriesParams& params, int quad_points, double b2_constant) {
    require_convergent(params);
    if (quad_points < 2) throw DomainError("quad_points must be at least 2");
    const detail::GaussLegendre rule(quad_points);
    const detail::GaussLegendre check_rule(quad_points + 8);

    EulerMaclaurinSides sides;
    const CertifiedValue cv = certified_sum(params, std::uint64_t{1} << 20);
    sides.series = cv.midpoint();
    sides.series_halfwidth = 0.5 * cv.width();
    const FDerivatives d = f_derivatives(params, 1.0);
    sides.boundary = d.f / 2.0 - d.f1 / 12.0;
    const long double integral = integral_from_one(params, rule);
    const long double remainder = bernoulli_remainder(params, rule, b2_constant);
    sides.integral = static_cast<double>(integral);
    sides.remainder = static_cast<double>(remainder);
    const long double integral_check = integral_from_one(params, check_rule);
    const long double remainder_check = bernoulli_remainder(params, check_rule, b2_constant);
    sides.quadrature_error = static_cast<double>(std::fabs(integral - integral_check) + std::fabs(remainder - remainder_check));
    return sides;
}

CheckReport euler_maclaurin_check(const SeriesParams& params, int quad_points, double b2_constant) {
    constexpr double kTolerance = 1e-8;
    const EulerMaclaurinSides sides = euler_maclaurin_sides(params, quad_points, b2_constant);
    const double rhs_value = sides.integral + sides.boundary + sides.remainder;
    const double discrepancy = std::fabs(sides.series - rhs_value);

    CheckReport report;
    report.name = "euler_maclaurin_identity";
    report.lhs = discrepancy;
    report.rhs = kTolerance;
    report.margin = kTolerance - discrepancy;
    report.location = series_location(params) + ",b2_constant=" + fmt(b2_constant);
    report.checked = 1;
    report.note = "series=" + fmt(sides.series) + " integral+corrections=" + fmt(rhs_value) +
                  " quadrature_error=" + fmt(sides.quadrature_error);
    if (sides.quadrature_error > 1e-10 || sides.series_halfwidth > 1e-10) {
        report.verdict = Verdict::inconclusive;
        report.note += " (quadrature or enclosure not converged)";
    } else if (discrepancy <= kTolerance) {
        report.verdict = Verdict::pass;
    } else {
        report.verdict = Verdict::fail;
        report.first_violation = Violation{report.location, discrepancy, kTolerance};
    }
    return report;
}

CheckReport bracket_sign_survey(const SeriesParams& params, int samples, double span) {
    require_convergent(params);
    if (samples < 2) throw DomainError("bracket_sign_survey needs at least two samples");
    int g4 = 0, g6 = 0, h4 = 0, h6 = 0;
    for (int k = 0; k < samples; ++k) {
        const double t = 1.0 + span * k / (samples - 1);
        g4 += g_derivative(params, t, 4) < 0.0;
        g6 += g_derivative(params, t, 6) < 0.0;
        h4 += h_derivative(params, t, 4) < 0.0;
        h6 += h_derivative(params, t, 6) < 0.0;
    }
    CheckReport report;
    report.name = "bracket_sign_survey";
    report.verdict = Verdict::unasserted;
    report.checked = static_cast<std::uint64_t>(samples);
    report.location = series_location(params);
    const std::string total = "/" + std::to_string(samples);
    report.note = "negative counts: g4 " + std::to_string(g4) + total + ", g6 " + std::to_string(g6) + total + ", h4 " +
                  std::to_string(h4) + total + ", h6 " + std::to_string(h6) + total;
    return report;
}

} // namespace hilbert
