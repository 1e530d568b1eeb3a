#include "hilbert/errors.hpp"
#include "hilbert/monotone.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace hilbert;
using Q = ExactRational;

namespace {

// Closed forms: Σ r(n-r) = n(n²-1)/6 and Σ r²(n-r) = n²(n²-1)/12.
Q a_alpha1(std::uint64_t n) {
    const auto m = static_cast<long>(n);
    return Q(m * m - 1, 6 * m * m);
}
Q a_alpha2(std::uint64_t n) {
    const auto m = static_cast<long>(n);
    return Q(m * m - 1, 12 * m * m);
}

std::vector<double> power_sums(double alpha, std::size_t len) {
    std::vector<double> out;
    long double acc = 0.0L;
    for (std::size_t r = 1; r <= len; ++r) {
        acc += std::pow(static_cast<long double>(r), static_cast<long double>(alpha));
        out.push_back(static_cast<double>(acc));
    }
    return out;
}

} // namespace

TEST_CASE("seq_a small values") {
    CHECK(seq_a(2.0, 1) == 0.0);
    CHECK(seq_a(0.3, 1) == 0.0);
    CHECK(seq_a(2.0, 2) == doctest::Approx(1.0 / 16).epsilon(1e-15));
    CHECK(seq_a(2.0, 3) == doctest::Approx(2.0 / 27).epsilon(1e-15));
    CHECK(seq_a_exact(2, 3) == Q(2, 27));
    CHECK(seq_a_exact(2, 1) == Q(0));
    CHECK_THROWS_AS(seq_a(2.0, 0), DomainError);
}

TEST_CASE("seq_a agrees with closed forms") {
    for (std::uint64_t n : {1u, 2u, 7u, 100u, 4096u, 10000u}) {
        CHECK(seq_a_exact(1, n) == a_alpha1(n));
        CHECK(seq_a_exact(2, n) == a_alpha2(n));
    }
}

TEST_CASE("seq_a floating evaluation tracks the exact sum") {
    for (unsigned alpha : {2u, 3u, 5u}) {
        for (std::uint64_t n : {2u, 10u, 333u, 1000u, 10000u}) {
            const double exact = seq_a_exact(alpha, n).to_double();
            CHECK(std::fabs(seq_a(alpha, n) - exact) <= 1e-12 * exact);
        }
    }
}

TEST_CASE("sequence is increasing") {
    for (double alpha : {1.01, 1.5, 2.0, 3.0}) {
        const auto r = verify_increasing({alpha, 10000, false});
        CHECK(r.verdict == Verdict::pass);
        CHECK(r.name == "sequence_increasing");
        CHECK(r.checked == 10000);
    }
    const auto local = verify_increasing({2.0, 2, false});
    CHECK(local.passed());
    CHECK(seq_a(2.0, 2) < seq_a(2.0, 3));
    CHECK_THROWS_AS(verify_increasing({1.0, 10, false}), DomainError);
    CHECK_THROWS_AS(verify_increasing({0.5, 10, false}), DomainError);
    CHECK_THROWS_AS(verify_increasing({2.0, 0, false}), DomainError);
}

TEST_CASE("exploratory runs below the hypothesis carry no verdict") {
    for (double alpha : {1.0, 0.5, -0.5}) {
        const auto r = verify_increasing({alpha, 200, true});
        CHECK(r.verdict == Verdict::unasserted);
        CHECK(r.note.find("exploratory") != std::string::npos);
    }
}

TEST_CASE("power sum ratio") {
    const auto a = verify_power_sum_ratio(2.0, 1);
    CHECK(a.passed());
    CHECK(a.lhs == doctest::Approx(1.0 / 5));
    CHECK(a.rhs == doctest::Approx(15.0 / 65));
    const auto a2 = verify_power_sum_ratio(2.0, 2);
    CHECK(a2.lhs == doctest::Approx(5.0 / 14));
    CHECK(a2.rhs == doctest::Approx(65.0 / 175));
    const auto b = verify_power_sum_ratio(3.0, 1);
    CHECK(b.passed());
    CHECK(b.lhs == doctest::Approx(1.0 / 9));
    CHECK(b.rhs == doctest::Approx(31.0 / 211));
    CHECK(verify_power_sum_ratio(2.0, 100).passed());
    CHECK(verify_power_sum_ratio(2.5, 100).passed());
    CHECK(verify_power_sum_ratio_range(1.5, 1000).passed());
    CHECK_THROWS_AS(verify_power_sum_ratio(1.0, 5), DomainError);
}

TEST_CASE("increasing sequence and ratio inequality hold independently") {
    for (double alpha : {1.5, 2.0, 3.0}) {
        CHECK(verify_increasing({alpha, 1000, false}).passed());
        CHECK(verify_power_sum_ratio_range(alpha, 1000).passed());
    }
}

TEST_CASE("second difference ratio") {
    const auto a = verify_second_difference(2.0, 0);
    CHECK(a.passed());
    CHECK(a.lhs == doctest::Approx(0.25));
    CHECK(a.rhs == doctest::Approx(0.28));
    CHECK(verify_second_difference(2.0, 1).passed());
    CHECK(verify_second_difference(1.5, 1000).passed());
    CHECK(verify_second_difference(1.5, 100000).passed());
    CHECK(verify_second_difference_range(2.0, 2000).passed());
    CHECK(verify_second_difference_range(2.7, 2000).passed());
}

TEST_CASE("ratio lemma harness") {
    std::vector<double> n, n2;
    for (int i = 1; i <= 20; ++i) {
        n.push_back(i);
        n2.push_back(static_cast<double>(i) * i);
    }
    // B = n, C = n²: B_1/B_2 = 1/2 > 1/4 = C_1/C_2, so nothing is claimed.
    CHECK(ratio_lemma_check(n, n2).verdict == Verdict::unasserted);
    const auto swapped = ratio_lemma_check(n2, n);
    CHECK(swapped.verdict == Verdict::pass);
    const auto same = ratio_lemma_check(n, n);
    CHECK(same.verdict == Verdict::pass);
    CHECK(same.margin == doctest::Approx(0.0));

    const auto B = power_sums(2.0, 100);
    std::vector<double> C;
    for (int i = 1; i <= 100; ++i) C.push_back(std::pow(i + 1.0, 4.0) - std::pow(i, 4.0));
    CHECK(ratio_lemma_check(B, C).verdict == Verdict::pass);

    std::vector<double> flat{1.0, 2.0, 2.0};
    CHECK_THROWS_AS(ratio_lemma_check(flat, std::vector<double>{1.0, 2.0, 3.0}), DomainError);
    CHECK_THROWS_AS(ratio_lemma_check(std::vector<double>{1.0, 2.0}, std::vector<double>{1.0, 2.0}), DomainError);
    CHECK_THROWS_AS(ratio_lemma_check(n, n2 = std::vector<double>(n2.begin(), n2.end() - 1)), DomainError);
    CHECK_THROWS_AS(ratio_lemma_check(std::vector<double>{-1.0, 2.0, 3.0}, std::vector<double>{1.0, 2.0, 3.0}), DomainError);
}

TEST_CASE("auxiliary function") {
    CHECK(f_aux(2.0, 1.0) == doctest::Approx(14.0).epsilon(1e-15));
    CHECK(f_aux(2.0, 1e-6) == doctest::Approx(12.0).epsilon(1e-10));
    CHECK(f_aux(2.0, 1.0 / 3) <= f_aux(2.0, 0.5));
    // For α = 2 the function is exactly 12 + 2x².
    for (double x : {0.05, 0.09, 0.1, 0.11, 0.3, 0.7}) CHECK(f_aux(2.0, x) == doctest::Approx(12.0 + 2 * x * x).epsilon(1e-13));
    CHECK_THROWS_AS(f_aux(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(f_aux(2.0, 1.5), DomainError);
    for (double alpha : {1.1, 2.0, 5.0}) {
        CHECK(verify_f_aux_grid(alpha, 1000).passed());
        for (int k = 1; k <= 1000; ++k) {
            const double x = k / 1000.0;
            CHECK(f_aux_derivative(alpha, x) >= -1e-10);
            // Continuity of the series/closed-form switch.
            if (k == 100) CHECK(f_aux(alpha, std::nextafter(0.1, 0.0)) == doctest::Approx(f_aux(alpha, 0.1)).epsilon(1e-13));
        }
        // Central difference of the value matches the derivative.
        for (double x : {0.02, 0.25, 0.6}) {
            const double h = 1e-5;
            const double fd = (f_aux(alpha, x + h) - f_aux(alpha, x - h)) / (2 * h);
            CHECK(f_aux_derivative(alpha, x) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}
