#include "hilbert/monotone.hpp"

#include "hilbert/errors.hpp"
#include "format.hpp"
#include "quadrature.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

namespace hilbert {

namespace {

constexpr double kRealSlack = 1e-12;
constexpr double kIncreasingSlack = 1e-14;

using detail::fmt;

std::optional<unsigned> integer_exponent(double alpha) {
    if (alpha >= 0.0 && alpha <= 64.0 && alpha == std::floor(alpha)) return static_cast<unsigned>(alpha);
    return std::nullopt;
}

void require_alpha_above_one(double alpha) {
    if (!std::isfinite(alpha) || !(alpha > 1.0)) throw DomainError("requires alpha > 1 (alpha=" + fmt(alpha) + ")");
}

mpz_class ipow(std::uint64_t base, unsigned e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

double ratio_to_double(const mpz_class& num, const mpz_class& den) { return mpq_class(num, den).get_d(); }

// Accumulates pointwise checks of lhs <= rhs over a range.
class RangeTracker {
public:
    explicit RangeTracker(std::string name) { report_.name = std::move(name); }

    void observe(const std::string& location, double lhs, double rhs, bool holds) {
        ++report_.checked;
        const double relative = (rhs - lhs) / std::max(std::fabs(rhs), std::numeric_limits<double>::min());
        if (!holds && !report_.first_violation) report_.first_violation = Violation{location, lhs, rhs};
        if (relative < tightest_) {
            tightest_ = relative;
            report_.lhs = lhs;
            report_.rhs = rhs;
            report_.margin = rhs - lhs;
            report_.location = location;
        }
    }

    CheckReport finish(Verdict when_clean = Verdict::pass) {
        if (report_.first_violation) {
            report_.verdict = when_clean == Verdict::unasserted ? Verdict::unasserted : Verdict::fail;
            const auto& v = *report_.first_violation;
            report_.lhs = v.lhs;
            report_.rhs = v.rhs;
            report_.margin = v.rhs - v.lhs;
            report_.location = v.location;
        } else {
            report_.verdict = when_clean;
        }
        if (report_.note.empty()) report_.note = "tightest relative margin " + fmt(tightest_);
        return report_;
    }

    CheckReport& report() { return report_; }

private:
    CheckReport report_;
    double tightest_ = std::numeric_limits<double>::infinity();
};

// (m+1)^k - m^k without cancellation.
long double forward_difference(long double m, long double k) {
    if (m == 0.0L) return 1.0L;
    return std::pow(m, k) * std::expm1(k * std::log1p(1.0L / m));
}

// (m+2)^k - 2(m+1)^k + m^k = k(k-1) ∫_0^2 (m+w)^{k-2} (1 - |1-w|) dw.
long double second_difference(long double m, long double k) {
    if (m < 16.0L) return forward_difference(m + 1.0L, k) - forward_difference(m, k);
    static const detail::GaussLegendre rule(20);
    const long double a = k - 2.0L;
    const long double left = rule.integrate([&](long double w) { return std::pow(m + w, a) * w; }, 0.0L, 1.0L);
    const long double right = rule.integrate([&](long double w) { return std::pow(m + w, a) * (2.0L - w); }, 1.0L, 2.0L);
    return k * (k - 1.0L) * (left + right);
}

} // namespace

double seq_a(double alpha, std::uint64_t n) {
    if (n == 0) throw DomainError("seq_a requires n >= 1");
    detail::CompensatedSum<long double> acc;
    const auto nn = static_cast<long double>(n);
    for (std::uint64_t r = 1; r < n; ++r) {
        const auto rr = static_cast<long double>(r);
        acc.add(std::pow(rr, static_cast<long double>(alpha)) * (nn - rr));
    }
    return static_cast<double>(acc.value() / std::pow(nn, static_cast<long double>(alpha) + 2.0L));
}

ExactRational seq_a_exact(unsigned alpha, std::uint64_t n) {
    if (n == 0) throw DomainError("seq_a requires n >= 1");
    mpz_class sum = 0;
    for (std::uint64_t r = 1; r < n; ++r) sum += ipow(r, alpha) * mpz_class(static_cast<unsigned long>(n - r));
    return ExactRational(sum, ipow(n, alpha + 2));
}

CheckReport verify_increasing(const SequenceSpec& spec) {
    if (!std::isfinite(spec.alpha)) throw DomainError("alpha must be finite");
    if (!spec.exploratory) require_alpha_above_one(spec.alpha);
    if (spec.n_max == 0) throw DomainError("n_max must be positive");

    RangeTracker tracker("sequence_increasing");
    const std::uint64_t n_max = spec.n_max;

    if (const auto ia = integer_exponent(spec.alpha)) {
        // S_n = Σ_{r<n} r^α (n-r) = n P_α(n-1) - P_{α+1}(n-1); a_n = S_n / n^{α+2}.
        const unsigned e = *ia;
        mpz_class p0 = 0, p1 = 0;
        mpz_class s_prev = 0;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            // Extend the prefix sums to r = n, then form S_{n+1}.
            const mpz_class rn = ipow(n, e);
            p0 += rn;
            p1 += rn * mpz_class(static_cast<unsigned long>(n));
            const mpz_class s_next = mpz_class(static_cast<unsigned long>(n + 1)) * p0 - p1;
            const mpz_class lhs_cross = s_prev * ipow(n + 1, e + 2);
            const mpz_class rhs_cross = s_next * ipow(n, e + 2);
            tracker.observe("n=" + std::to_string(n), ratio_to_double(s_prev, ipow(n, e + 2)),
                            ratio_to_double(s_next, ipow(n + 1, e + 2)), lhs_cross <= rhs_cross);
            s_prev = s_next;
        }
        tracker.report().note = "exact integer arithmetic";
    } else {
        const long double a = spec.alpha;
        detail::CompensatedSum<long double> p0, p1;
        long double prev = 0.0L;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            const auto nn = static_cast<long double>(n);
            const long double rn = std::pow(nn, a);
            p0.add(rn);
            p1.add(rn * nn);
            const long double next = ((nn + 1.0L) * p0.value() - p1.value()) / std::pow(nn + 1.0L, a + 2.0L);
            const long double slack = kIncreasingSlack * std::max(std::fabs(prev), std::fabs(next));
            tracker.observe("n=" + std::to_string(n), static_cast<double>(prev), static_cast<double>(next), prev <= next + slack);
            prev = next;
        }
    }
    if (spec.exploratory && !(spec.alpha > 1.0)) {
        CheckReport r = tracker.finish(Verdict::unasserted);
        r.note = "exploratory run outside alpha > 1; " + r.note;
        return r;
    }
    return tracker.finish();
}

namespace {

void observe_power_sum_ratio_exact(RangeTracker& tracker, unsigned e, std::uint64_t n, const mpz_class& b_n, const mpz_class& b_next) {
    const unsigned k = e + 2;
    const mpz_class c0 = ipow(n + 1, k) - ipow(n, k);
    const mpz_class c1 = ipow(n + 2, k) - ipow(n + 1, k);
    tracker.observe("n=" + std::to_string(n), ratio_to_double(b_n, b_next), ratio_to_double(c0, c1), b_n * c1 <= c0 * b_next);
}

void observe_power_sum_ratio_real(RangeTracker& tracker, long double a, std::uint64_t n, long double b_n, long double b_next) {
    const long double k = a + 2.0L;
    const auto nn = static_cast<long double>(n);
    const long double lhs = b_n / b_next;
    const long double rhs = forward_difference(nn, k) / forward_difference(nn + 1.0L, k);
    tracker.observe("n=" + std::to_string(n), static_cast<double>(lhs), static_cast<double>(rhs), lhs <= rhs * (1.0L + kRealSlack));
}

} // namespace

CheckReport verify_power_sum_ratio_range(double alpha, std::uint64_t n_max) {
    require_alpha_above_one(alpha);
    if (n_max == 0) throw DomainError("n must be positive");
    RangeTracker tracker("power_sum_ratio");
    if (const auto ia = integer_exponent(alpha)) {
        mpz_class b = 1; // Σ_{r<=1} r^α
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            const mpz_class next = b + ipow(n + 1, *ia);
            observe_power_sum_ratio_exact(tracker, *ia, n, b, next);
            b = next;
        }
    } else {
        const long double a = alpha;
        detail::CompensatedSum<long double> b;
        b.add(1.0L);
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            detail::CompensatedSum<long double> next = b;
            next.add(std::pow(static_cast<long double>(n + 1), a));
            observe_power_sum_ratio_real(tracker, a, n, b.value(), next.value());
            b = next;
        }
    }
    return tracker.finish();
}

CheckReport verify_power_sum_ratio(double alpha, std::uint64_t n) {
    require_alpha_above_one(alpha);
    if (n == 0) throw DomainError("n must be positive");
    RangeTracker tracker("power_sum_ratio");
    if (const auto ia = integer_exponent(alpha)) {
        mpz_class b = 0;
        for (std::uint64_t r = 1; r <= n; ++r) b += ipow(r, *ia);
        observe_power_sum_ratio_exact(tracker, *ia, n, b, b + ipow(n + 1, *ia));
    } else {
        const long double a = alpha;
        detail::CompensatedSum<long double> b;
        for (std::uint64_t r = 1; r <= n; ++r) b.add(std::pow(static_cast<long double>(r), a));
        observe_power_sum_ratio_real(tracker, a, n, b.value(), b.value() + std::pow(static_cast<long double>(n + 1), a));
    }
    return tracker.finish();
}

namespace {

void observe_second_difference(RangeTracker& tracker, double alpha, std::uint64_t n) {
    const std::string loc = "n=" + std::to_string(n);
    if (const auto ia = integer_exponent(alpha)) {
        const unsigned k = *ia + 2;
        auto d2 = [k](std::uint64_t m) -> mpz_class { return ipow(m + 2, k) - 2 * ipow(m + 1, k) + ipow(m, k); };
        const mpz_class lhs_num = ipow(n + 1, *ia);
        const mpz_class lhs_den = ipow(n + 2, *ia);
        const mpz_class rhs_num = d2(n);
        const mpz_class rhs_den = d2(n + 1);
        tracker.observe(loc, ratio_to_double(lhs_num, lhs_den), ratio_to_double(rhs_num, rhs_den),
                        lhs_num * rhs_den <= rhs_num * lhs_den);
        return;
    }
    const long double a = alpha;
    const auto m = static_cast<long double>(n);
    const long double lhs = std::exp(a * std::log1p(-1.0L / (m + 2.0L)));
    const long double rhs = second_difference(m, a + 2.0L) / second_difference(m + 1.0L, a + 2.0L);
    tracker.observe(loc, static_cast<double>(lhs), static_cast<double>(rhs), lhs <= rhs * (1.0L + kRealSlack));
}

} // namespace

CheckReport verify_second_difference(double alpha, std::uint64_t n) {
    require_alpha_above_one(alpha);
    RangeTracker tracker("second_difference_ratio");
    observe_second_difference(tracker, alpha, n);
    return tracker.finish();
}

CheckReport verify_second_difference_range(double alpha, std::uint64_t n_max) {
    require_alpha_above_one(alpha);
    RangeTracker tracker("second_difference_ratio");
    for (std::uint64_t n = 0; n <= n_max; ++n) observe_second_difference(tracker, alpha, n);
    return tracker.finish();
}

CheckReport ratio_lemma_check(std::span<const double> B, std::span<const double> C) {
    if (B.size() != C.size()) throw DomainError("ratio_lemma_check needs sequences of equal length");
    if (B.size() < 3) throw DomainError("ratio_lemma_check needs sequences of length >= 3");
    for (const auto seq : {B, C}) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (!(seq[i] > 0.0) || !std::isfinite(seq[i])) throw DomainError("sequence entries must be positive and finite (index " + std::to_string(i + 1) + ")");
            if (i > 0 && !(seq[i] > seq[i - 1])) throw DomainError("sequence must be strictly increasing (index " + std::to_string(i + 1) + ")");
        }
    }
    // Cross-multiplied comparisons x/y <= u/v as x v <= u y, all denominators positive.
    auto le = [](long double x, long double y, long double u, long double v) {
        const long double l = x * v;
        const long double r = u * y;
        return l <= r + 1e-15L * std::fabs(r);
    };
    const std::size_t len = B.size();
    std::optional<std::size_t> hypothesis_failure;
    if (!le(B[0], B[1], C[0], C[1])) hypothesis_failure = 0;
    for (std::size_t i = 0; i + 2 < len && !hypothesis_failure; ++i) {
        const long double db0 = static_cast<long double>(B[i + 1]) - B[i];
        const long double db1 = static_cast<long double>(B[i + 2]) - B[i + 1];
        const long double dc0 = static_cast<long double>(C[i + 1]) - C[i];
        const long double dc1 = static_cast<long double>(C[i + 2]) - C[i + 1];
        if (!le(db0, db1, dc0, dc1)) hypothesis_failure = i + 1;
    }

    RangeTracker tracker("ratio_lemma");
    for (std::size_t i = 0; i + 1 < len; ++i) {
        const double lhs = B[i] / B[i + 1];
        const double rhs = C[i] / C[i + 1];
        tracker.observe("n=" + std::to_string(i + 1), lhs, rhs, le(B[i], B[i + 1], C[i], C[i + 1]));
    }
    const bool conclusion_holds = !tracker.report().first_violation;
    CheckReport r = tracker.finish(hypothesis_failure ? Verdict::unasserted : Verdict::pass);
    if (hypothesis_failure) {
        r.note = (*hypothesis_failure == 0 ? std::string("hypothesis fails at B_1/B_2 <= C_1/C_2")
                                           : "hypothesis fails at n=" + std::to_string(*hypothesis_failure)) +
                 "; conclusion " + (conclusion_holds ? std::string("holds for all n") : "fails at " + r.first_violation->location);
    }
    return r;
}

namespace {

void require_unit_interval(double x) {
    if (!(x > 0.0) || !(x <= 1.0)) throw DomainError("f_aux requires 0 < x <= 1 (x=" + fmt(x) + ")");
}

constexpr double kSeriesCutoff = 0.1;

} // namespace

double f_aux(double alpha, double x) {
    require_unit_interval(x);
    const long double k = alpha + 2.0L;
    const long double xx = x;
    if (x < kSeriesCutoff) {
        // 2 Σ_{j>=1} C(k, 2j) x^{2j-2}
        long double coeff = k * (k - 1.0L) / 2.0L; // C(k, 2)
        long double power = 1.0L;
        long double sum = 0.0L;
        for (int j = 1; j <= 30; ++j) {
            sum += coeff * power;
            coeff *= (k - 2.0L * j) * (k - 2.0L * j - 1.0L) / ((2.0L * j + 1.0L) * (2.0L * j + 2.0L));
            power *= xx * xx;
        }
        return static_cast<double>(2.0L * sum);
    }
    return static_cast<double>((std::pow(1.0L + xx, k) + std::pow(1.0L - xx, k) - 2.0L) / (xx * xx));
}

double f_aux_derivative(double alpha, double x) {
    require_unit_interval(x);
    const long double k = alpha + 2.0L;
    const long double xx = x;
    if (x < kSeriesCutoff) {
        // 2 Σ_{j>=2} C(k, 2j) (2j-2) x^{2j-3}
        long double coeff = k * (k - 1.0L) * (k - 2.0L) * (k - 3.0L) / 24.0L; // C(k, 4)
        long double power = xx;
        long double sum = 0.0L;
        for (int j = 2; j <= 30; ++j) {
            sum += coeff * (2.0L * j - 2.0L) * power;
            coeff *= (k - 2.0L * j) * (k - 2.0L * j - 1.0L) / ((2.0L * j + 1.0L) * (2.0L * j + 2.0L));
            power *= xx * xx;
        }
        return static_cast<double>(2.0L * sum);
    }
    const long double F = std::pow(1.0L + xx, k) + std::pow(1.0L - xx, k) - 2.0L;
    const long double dF = k * (std::pow(1.0L + xx, k - 1.0L) - std::pow(1.0L - xx, k - 1.0L));
    return static_cast<double>(dF / (xx * xx) - 2.0L * F / (xx * xx * xx));
}

CheckReport verify_f_aux_grid(double alpha, std::uint64_t n_max) {
    if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
    if (n_max == 0) throw DomainError("n_max must be positive");
    RangeTracker tracker("f_aux_grid_monotone");
    double upper = f_aux(alpha, 0.5);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const double lower = f_aux(alpha, 1.0 / static_cast<double>(n + 2));
        tracker.observe("n=" + std::to_string(n), lower, upper, lower <= upper + 1e-15 * std::fabs(upper));
        upper = lower;
    }
    return tracker.finish();
}

} // namespace hilbert
