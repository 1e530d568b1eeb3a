#include "hilbert/errors.hpp"
#include "hilbert/series.hpp"
#include "hilbert/special.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

using namespace hilbert;

namespace {

using Q = ExactRational;

// Rising products s(s+1)...(s+k-1) and (1+λ)(2+λ)...(k+λ).
Q rising(const Q& s, int k) {
    Q out(1);
    for (int j = 0; j < k; ++j) out *= s + Q(j);
    return out;
}
Q shifted(const Q& l, int k) {
    Q out(1);
    for (int j = 1; j <= k; ++j) out *= Q(j) + l;
    return out;
}

// Second, independent transcription of D_0..D_5.
Q d_second_reading(int i, const Q& s, const Q& l) {
    const Q k1(720), k2(30240);
    const Q A = (s + Q(1) - l) * (s - l);
    switch (i) {
    case 0:
        return Q(1) / (Q(1) + l) - Q(1, 2) + l / Q(12) - (l - Q(1)) * (l - Q(2)) * (l - Q(3)) / k1 +
               (l - Q(2)) * (l - Q(3)) * (l - Q(4)) * (A + s * (s + Q(1))) / k2;
    case 1:
        return s / shifted(l, 2) - s / Q(12) + Q(3) * s * l * (l - Q(1)) / k1 -
               s * (l - Q(2)) * (l - Q(3)) * (Q(3) * A + Q(2) * (s + Q(1)) * (l - Q(4)) + Q(3) * (s + Q(1)) * (s + Q(2))) / k2;
    case 2:
        return rising(s, 2) / shifted(l, 3) - Q(3) * rising(s, 2) * l / k1 +
               rising(s, 2) * (l - Q(2)) *
                   (Q(3) * A + (l - Q(3)) * (l - Q(4)) + Q(6) * (s + Q(2)) * (l - Q(3)) + Q(3) * (s + Q(2)) * (s + Q(3))) / k2;
    case 3:
        return rising(s, 3) / shifted(l, 4) + rising(s, 3) / k1 -
               rising(s, 3) * (Q(3) * A + Q(3) * (l - Q(2)) * (l - Q(3)) + Q(6) * (s + Q(3)) * (l - Q(2)) + (s + Q(3)) * (s + Q(4))) / k2;
    case 4:
        return rising(s, 4) / shifted(l, 5) + rising(s, 4) * (Q(3) * (l - Q(2)) + Q(2) * (s + Q(4))) / k2;
    case 5:
        return rising(s, 5) * (Q(1) / shifted(l, 6) - Q(1) / k2);
    default:
        return Q(0);
    }
}

long double f_ld(const SeriesParams& p, long double t) {
    return std::pow(t, static_cast<long double>(p.lambda)) * std::pow(t + p.n, -static_cast<long double>(p.s));
}

// Richardson-extrapolated central differences of order 1..3.
long double central(const std::function<long double(long double)>& f, long double t, int order, long double h) {
    auto d = [&](long double step) -> long double {
        switch (order) {
        case 1: return (f(t + step) - f(t - step)) / (2 * step);
        case 2: return (f(t + step) - 2 * f(t) + f(t - step)) / (step * step);
        default: return (f(t + 2 * step) - 2 * f(t + step) + 2 * f(t - step) - f(t - 2 * step)) / (2 * step * step * step);
        }
    };
    return (4 * d(h / 2) - d(h)) / 3;
}

// Σ_{m>K} f(m) brackets for decreasing f: [∫_{K+1}^∞ f, ∫_K^∞ f], by the
// incomplete beta form ∫_T^∞ f = n^{λ+1-s} B_{n/(T+n)}(s-λ-1, λ+1).
double tail_integral(const SeriesParams& p, double t) {
    const double n = static_cast<double>(p.n);
    return std::pow(n, p.lambda + 1.0 - p.s) * boost::math::beta(p.s - p.lambda - 1.0, p.lambda + 1.0, n / (t + n));
}

} // namespace

TEST_CASE("certified_sum brackets zeta identities") {
    const double z2 = boost::math::zeta(2.0), z3 = boost::math::zeta(3.0), z4 = boost::math::zeta(4.0);
    const auto a = certified_sum({1, 3, 1}, 1000);
    CHECK(a.lower <= z2 - z3);
    CHECK(a.upper >= z2 - z3);
    CHECK(a.tail_method == TailMethod::integral_comparison);
    CHECK(a.terms_summed >= 1000);
    CHECK(a.width() < 1e-9);
    const auto b = certified_sum({0, 2, 1}, 1000);
    CHECK(b.lower <= z2 - 1.0);
    CHECK(b.upper >= z2 - 1.0);
    const auto c = certified_sum({1, 4, 1}, 1000);
    CHECK(c.lower <= z3 - z4);
    CHECK(c.upper >= z3 - z4);
    CHECK(to_string(TailMethod::integral_comparison) == "integral-comparison");
}

TEST_CASE("certified_sum scaling limit for lambda = 1, s = 3") {
    for (std::uint64_t n : {10u, 1000u, 100000u}) {
        const auto cv = certified_sum({1, 3, n}, 1000);
        CHECK(cv.lower * static_cast<double>(n) <= 0.5);
    }
    const auto big = certified_sum({1, 3, 100000}, 1000);
    CHECK(big.lower * 1e5 == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(big.upper * 1e5 == doctest::Approx(0.5).epsilon(1e-5));
}

TEST_CASE("certified_sum honours the decreasing region and rejects divergence") {
    const auto cv = certified_sum({3, 4.5, 500}, 10);
    CHECK(cv.terms_summed > 3 * 500 / 1.5);
    CHECK_THROWS_AS(certified_sum({1, 2, 1}, 100), DivergenceError);
    CHECK_THROWS_AS(certified_sum({0.5, 1.2, 1}, 100), DomainError);
    CHECK_THROWS_AS(certified_sum({0, 3, 0}, 100), DomainError);
    const auto ps = partial_sum({0, 2, 1}, 3);
    CHECK(ps.tail_method == TailMethod::none);
    CHECK(ps.lower == doctest::Approx(0.25 + 1.0 / 9 + 1.0 / 16).epsilon(1e-15));
}

TEST_CASE("increasing the budget never widens the enclosure") {
    for (SeriesParams p : {SeriesParams{1, 3, 1}, SeriesParams{-0.5, 1, 7}, SeriesParams{2, 3.3, 40}, SeriesParams{0.3, 1.9, 1000}}) {
        double width = certified_sum(p, 1000).width();
        for (std::uint64_t budget : {10000u, 100000u}) {
            const double w = certified_sum(p, budget).width();
            CHECK(w <= width);
            width = w;
        }
    }
}

TEST_CASE("certified_sum contains a brute-force value on random triples") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> lam(-0.9, 3.0), gap(0.1, 1.5), logn(0.0, 3.0);
    constexpr std::uint64_t kTerms = 200000;
    for (int t = 0; t < 12; ++t) {
        SeriesParams p;
        p.lambda = lam(rng);
        p.s = p.lambda + 1.0 + gap(rng);
        p.n = static_cast<std::uint64_t>(std::pow(10.0, logn(rng)));
        long double partial = 0.0L;
        for (std::uint64_t m = kTerms; m >= 1; --m) {
            const double x = static_cast<double>(m);
            partial += std::pow(x, p.lambda) * std::pow(x + static_cast<double>(p.n), -p.s);
        }
        const double lo = static_cast<double>(partial) + tail_integral(p, kTerms + 1.0);
        const double hi = static_cast<double>(partial) + tail_integral(p, static_cast<double>(kTerms));
        const auto cv = certified_sum(p, 1000);
        const double slack = 1e-12 * hi;
        CHECK(cv.lower <= hi + slack);
        CHECK(cv.upper >= lo - slack);
    }
}

TEST_CASE("beta series bound") {
    const auto a = verify_beta_series_bound({1, 3, 1});
    CHECK(a.verdict == Verdict::pass);
    CHECK(a.rhs == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(a.margin == doctest::Approx(0.5 - 0.442877).epsilon(1e-5));
    CHECK(verify_beta_series_bound({-0.5, 1, 1}).passed());
    CHECK(verify_beta_series_bound({2, 5, 1}).passed());
    CHECK(verify_beta_series_bound({2, 3.25, 100}).passed());
    CHECK_THROWS_AS(verify_beta_series_bound({-1, 1, 1}), DomainError);
    CHECK_THROWS_AS(verify_beta_series_bound({1, 2, 1}), DivergenceError);
}

TEST_CASE("a false bound is reported as a failure") {
    // λ = 3, s = 4.5 lies outside every range where the beta bound is claimed;
    // whatever the outcome, the report must be internally consistent.
    const auto r = verify_beta_series_bound({0.5, 1.6, 1});
    CHECK((r.verdict == Verdict::pass) == (r.lhs <= r.rhs));
    // Σ m/(m+1)^3 = ζ(2) - ζ(3) ≈ 0.4429 exceeds 0.4
    const auto cv = certified_sum_against({1, 3, 1}, 0.4);
    CHECK(cv.lower > 0.4);
}

TEST_CASE("linear series bound") {
    const auto a = verify_linear_series_bound(3, 1);
    CHECK(a.passed());
    CHECK(a.rhs == doctest::Approx(0.5));
    CHECK(a.lhs >= boost::math::zeta(2.0) - boost::math::zeta(3.0));
    const auto b = verify_linear_series_bound(4, 1);
    CHECK(b.passed());
    CHECK(b.rhs == doctest::Approx(1.0 / 6.0));
    CHECK(b.lhs >= boost::math::zeta(3.0) - boost::math::zeta(4.0));
    CHECK(b.lhs == doctest::Approx(boost::math::zeta(3.0) - boost::math::zeta(4.0)).epsilon(1e-9));
    CHECK(verify_linear_series_bound(2.1, 100).passed());
    CHECK_THROWS_AS(verify_linear_series_bound(2.0, 1), DomainError);
    CHECK_THROWS_AS(verify_linear_series_bound(3.0, 0), DomainError);
}

TEST_CASE("D polynomials: values, poles and a second reading") {
    CHECK(d_polynomial(5, Q(5), Q(2)).value == Q(1, 4));
    CHECK(d_polynomial(4, Q(4), Q(2)).value.sign() > 0);
    CHECK_THROWS_AS(d_polynomial(6, Q(4), Q(2)), DomainError);
    CHECK_THROWS_AS(d_polynomial(3, Q(4), Q(-4)), DomainError);
    CHECK_NOTHROW(d_polynomial(2, Q(4), Q(-4)));
    CHECK_THROWS_AS(d_polynomial(0, 4.0, -1.0), DomainError);

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> num(1, 640);
    for (int t = 0; t < 60; ++t) {
        const Q l = Q(1) + Q(num(rng), 640);
        const Q s = l + Q(1) + Q(num(rng) * 3, 640);
        for (int i = 0; i <= 5; ++i) CHECK(d_polynomial(i, s, l).value == d_second_reading(i, s, l));
    }
    for (int i = 0; i <= 5; ++i) CHECK(d_polynomial(i, Q(5), Q(2)).value == d_second_reading(i, Q(5), Q(2)));
}

TEST_CASE("D polynomials: floating evaluation agrees with exact values") {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<long> num(1, 1000);
    for (int t = 0; t < 100; ++t) {
        const Q l = Q(1) + Q(num(rng), 1000);
        const Q s = l + Q(1) + Q(num(rng) * 3, 1000);
        for (int i = 0; i <= 5; ++i) {
            const double exact = d_polynomial(i, s, l).value.to_double();
            const double approx = d_polynomial(i, s.to_double(), l.to_double());
            CHECK(std::fabs(approx - exact) <= 1e-9 * std::fabs(exact) + 1e-14);
        }
    }
}

TEST_CASE("D polynomials against the derivative expansion") {
    // The closed forms differ from the exact expansion of the lower-bound
    // margin by two nonnegative terms on the region, traced to the f'''(1)
    // and g'''(1) expansions they were assembled from.
    for (SeriesParams p : {SeriesParams{1.25, 2.5, 1}, SeriesParams{1.5, 4, 3}, SeriesParams{2, 5, 2}, SeriesParams{1.75, 3.5, 10},
                           SeriesParams{0.5, 3, 4}}) {
        const double b = static_cast<double>(p.n) + 1.0;
        const double l = p.lambda, s = p.s;
        const double offset = 3.0 * (l - 1.0) * (2.0 - l) / (720.0 * std::pow(b, s)) +
                              s * (s + 1) * (s + 2) * (s - l) * (s + 1 - l) / (15120.0 * std::pow(b, s + 3));
        const double diff = euler_maclaurin_margin_lower(p) - d_polynomial_bound(p);
        CHECK(std::fabs(diff - offset) <= 1e-13 / std::pow(b, s));
    }
}

TEST_CASE("region sweep") {
    const auto corners = verify_region(Q(1));
    CHECK(corners.verdict == Verdict::pass);
    CHECK(corners.checked == 2);
    const auto fine = verify_region(Q(1, 16), 2);
    CHECK(fine.verdict == Verdict::pass);
    CHECK(fine.rhs >= 0.0);
    const auto by_index = verify_region_by_index(Q(1, 16));
    for (const auto& r : by_index) CHECK(r.passed());
    CHECK(by_index[0].rhs == 0.0); // D_0 vanishes identically at λ = 2
    CHECK_THROWS_AS(verify_region(Q(0)), DomainError);
    for (int i = 0; i <= 5; ++i) CHECK(d_polynomial(i, Q(5), Q(2)).value.sign() >= 0);
    for (int m = 1; m <= 16; ++m) CHECK(d_polynomial(1, Q(3) + Q(m, 8), Q(2)).value.sign() >= 0);
}

TEST_CASE("derivatives of the summand") {
    const SeriesParams p{1.5, 4, 3};
    const auto d = f_derivatives(p, 2.0);
    CHECK(d.f2 == doctest::Approx(d.g + d.h).epsilon(1e-15));
    auto f = [&](long double t) { return f_ld(p, t); };
    CHECK(std::fabs(d.f2 - static_cast<double>(central(f, 2.0L, 2, 1e-3L))) <= 1e-11 * std::fabs(d.f2));

    const auto one = f_derivatives({2, 5, 1}, 1.0);
    CHECK(one.f == doctest::Approx(1.0 / 32.0).epsilon(1e-15));

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> lam(-0.5, 3.0), gap(0.2, 3.0), tt(0.5, 20.0);
    std::uniform_int_distribution<std::uint64_t> nn(1, 50);
    for (int k = 0; k < 100; ++k) {
        SeriesParams q;
        q.lambda = lam(rng);
        q.s = q.lambda + 1 + gap(rng);
        q.n = nn(rng);
        const double t = tt(rng);
        const auto r = f_derivatives(q, t);
        auto fq = [&](long double x) { return f_ld(q, x); };
        const long double h = 1e-3L * t;
        CHECK(std::fabs(r.f1 - central(fq, t, 1, h)) <= 1e-6 * std::fabs(r.f1) + 1e-14 * r.f / t);
        CHECK(std::fabs(r.f2 - central(fq, t, 2, h)) <= 1e-6 * std::fabs(r.f2) + 1e-12 * r.f / (t * t));
        CHECK(std::fabs(r.f3 - central(fq, t, 3, 4 * h)) <= 1e-6 * std::fabs(r.f3) + 1e-10 * r.f / (t * t * t));
        auto gq = [&](long double x) { return static_cast<long double>(g_derivative(q, static_cast<double>(x), 0)); };
        CHECK(std::fabs(r.g1 - central(gq, t, 1, h)) <= 1e-6 * std::fabs(r.g1) + 1e-12 * std::fabs(r.g) / t);
        CHECK(r.g == doctest::Approx(g_derivative(q, t, 0)).epsilon(1e-13));
        CHECK(r.h1 == doctest::Approx(h_derivative(q, t, 1)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(f_derivatives(p, 0.0), DomainError);
}

TEST_CASE("g''' at t = 1 against the eight-term expansion") {
    const SeriesParams p{2, 5, 1};
    const double g3 = f_derivatives(p, 1.0).g3;
    auto g = [&](long double x) { return static_cast<long double>(g_derivative(p, static_cast<double>(x), 0)); };
    CHECK(std::fabs(g3 - static_cast<double>(central(g, 1.0L, 3, 4e-3L))) <= 1e-6 * std::fabs(g3));

    // The eight-term expansion behind D_3 carries 3 instead of 1 in its
    // fourth term; the exact third derivative differs from it by that term.
    const double l = p.lambda, s = p.s, n = 1.0, b = 2.0, A = (s + 1 - l) * (s - l);
    const double expansion = A * (l - 2) * (l - 3) * (l - 4) / std::pow(b, s) - 3 * s * A * (l - 2) * (l - 3) / std::pow(b, s + 1) +
                           3 * s * (s + 1) * A * (l - 2) / std::pow(b, s + 2) - 3 * s * (s + 1) * (s + 2) * A / std::pow(b, s + 3) +
                           n * n * s * (s + 1) * (l - 2) * (l - 3) * (l - 4) / std::pow(b, s + 2) -
                           3 * n * n * s * (s + 1) * (s + 2) * (l - 2) * (l - 3) / std::pow(b, s + 3) +
                           3 * n * n * s * (s + 1) * (s + 2) * (s + 3) * (l - 2) / std::pow(b, s + 4) -
                           n * n * s * (s + 1) * (s + 2) * (s + 3) * (s + 4) / std::pow(b, s + 5);
    CHECK(g3 - expansion == doctest::Approx(2 * s * (s + 1) * (s + 2) * A / std::pow(b, s + 3)).epsilon(1e-12));
}

TEST_CASE("head integral and its closed-form lower bound") {
    for (SeriesParams p : {SeriesParams{1.5, 4, 3}, SeriesParams{2, 5, 1}, SeriesParams{1.1, 2.2, 100}, SeriesParams{0, 2, 1},
                           SeriesParams{-0.5, 1, 2}}) {
        const double n = static_cast<double>(p.n);
        const double oracle = std::pow(n, p.lambda + 1 - p.s) * boost::math::beta(p.lambda + 1, p.s - p.lambda - 1, 1 / (1 + n));
        CHECK(head_integral(p) == doctest::Approx(oracle).epsilon(1e-13));
        CHECK(head_integral(p) >= head_integral_lower_bound(p));
    }
    CHECK_THROWS_AS(head_integral({-1, 2, 1}), DomainError);
}

TEST_CASE("the quantity the D polynomials bound is nonnegative on the region") {
    for (int a = 1; a <= 4; ++a) {
        const double l = 1.0 + a / 4.0;
        for (double s = l + 1.25; s <= 5.0; s += 0.25) {
            for (std::uint64_t n : {1u, 2u, 5u, 10u, 100u}) CHECK(euler_maclaurin_margin({l, s, n}) >= -1e-12);
        }
    }
}

TEST_CASE("Euler-Maclaurin identity") {
    for (SeriesParams p : {SeriesParams{1.5, 4, 3}, SeriesParams{0, 2, 1}, SeriesParams{2, 5, 2}}) {
        const auto exact = euler_maclaurin_check(p, 20);
        CHECK(exact.verdict == Verdict::pass);
        CHECK(exact.lhs <= 1e-8);
        const auto shifted = euler_maclaurin_check(p, 20, 0.5);
        CHECK(shifted.verdict == Verdict::fail);
        // Raising the constant by 1/3 shifts the remainder by -(1/6) ∫ f'' = f'(1)/6.
        CHECK(shifted.lhs == doctest::Approx(std::fabs(f_derivatives(p, 1.0).f1) / 6).epsilon(1e-6));
        const auto sides = euler_maclaurin_sides(p, 20);
        CHECK(sides.quadrature_error < 1e-12);
    }
    CHECK_THROWS_AS(euler_maclaurin_check({1, 2, 1}, 20), DivergenceError);
    CHECK_THROWS_AS(euler_maclaurin_check({1, 3, 1}, 1), DomainError);
}

TEST_CASE("bracket sign survey carries no verdict") {
    const auto r = bracket_sign_survey({1.5, 4, 3}, 101);
    CHECK(r.verdict == Verdict::unasserted);
    CHECK(r.checked == 101);
    CHECK(r.note.find("g4") != std::string::npos);
}
