#pragma once

#include "hilbert/rational.hpp"
#include "hilbert/report.hpp"

#include <cstdint>
#include <span>

namespace hilbert {

/// a_n = n^{-(α+2)} Σ_{r=1}^{n-1} r^α (n-r); a_1 = 0.
double seq_a(double alpha, std::uint64_t n);

/// Exact a_n for a nonnegative integer exponent.
ExactRational seq_a_exact(unsigned alpha, std::uint64_t n);

struct SequenceSpec {
    double alpha = 2.0;
    std::uint64_t n_max = 1;
    bool exploratory = false; ///< permits alpha <= 1; the report is then unasserted
};

/// a_{n+1} >= a_n for n = 1..n_max. Integer α is decided exactly; otherwise in
/// extended precision with absolute slack 1e-14 max(|a_n|, |a_{n+1}|).
/// Throws DomainError for α <= 1 unless spec.exploratory.
CheckReport verify_increasing(const SequenceSpec& spec);

/// Σ_{r<=n} r^α / Σ_{r<=n+1} r^α <= ((n+1)^{α+2} - n^{α+2}) / ((n+2)^{α+2} - (n+1)^{α+2}).
CheckReport verify_power_sum_ratio(double alpha, std::uint64_t n);
/// The same inequality for every n in 1..n_max.
CheckReport verify_power_sum_ratio_range(double alpha, std::uint64_t n_max);

/// ((n+1)/(n+2))^α <= Δ²(n) / Δ²(n+1), Δ²(m) = (m+2)^{α+2} - 2(m+1)^{α+2} + m^{α+2}.
CheckReport verify_second_difference(double alpha, std::uint64_t n);
/// The same inequality for every n in 0..n_max.
CheckReport verify_second_difference_range(double alpha, std::uint64_t n_max);

/// Falsification harness for the ratio lemma: if B_1/B_2 <= C_1/C_2 and
/// consecutive differences satisfy ΔB_n/ΔB_{n+1} <= ΔC_n/ΔC_{n+1} for every n,
/// then B_n/B_{n+1} <= C_n/C_{n+1} for every n. Fails only when the hypothesis
/// holds and the conclusion does not; unasserted when the hypothesis fails.
/// Throws DomainError unless both sequences are positive, strictly increasing
/// and of equal length >= 3.
CheckReport ratio_lemma_check(std::span<const double> B, std::span<const double> C);

/// f(x) = x^{-2} ((1+x)^{α+2} + (1-x)^{α+2} - 2) on 0 < x <= 1, by its
/// binomial series below x = 0.1.
double f_aux(double alpha, double x);
double f_aux_derivative(double alpha, double x);

/// f(1/(n+2)) <= f(1/(n+1)) for n = 1..n_max.
CheckReport verify_f_aux_grid(double alpha, std::uint64_t n_max);

} // namespace hilbert
