#pragma once

#include <cstdint>

namespace hilbert {

/// Hölder-conjugate pair (p, q) with 1/p + 1/q = 1 and p, q > 1.
class ConjugateExponents {
public:
    /// Throws DomainError unless p > 1.
    static ConjugateExponents from_p(double p);

    [[nodiscard]] double p() const noexcept { return p_; }
    [[nodiscard]] double q() const noexcept { return q_; }

    /// The swapped pair (q, p).
    [[nodiscard]] ConjugateExponents dual() const noexcept { return {q_, p_}; }

private:
    ConjugateExponents(double p, double q) noexcept : p_(p), q_(q) {}
    double p_;
    double q_;
};

inline ConjugateExponents conjugate(double p) { return ConjugateExponents::from_p(p); }

/// Exponents (α, β) of the kernel x^α y^β / (x+y)^{α+β+1}.
struct KernelParams {
    double alpha = 0.0;
    double beta = 0.0;
};

/// ln Γ(x) for x > 0.
double log_gamma(double x);

/// ln B(x, y) for x, y > 0, evaluated without forming Γ(x+y).
double log_beta(double x, double y);

/// B(x, y) = Γ(x)Γ(y)/Γ(x+y) for x, y > 0.
double beta(double x, double y);

/// ln C(n, k) for 0 <= k <= n.
double log_binomial(std::uint64_t n, std::uint64_t k);

/// B(α + 1/p, β + 1/q), the ℓ^p norm of H(α, β) on its validity region.
/// Throws DomainError unless α > -1/p and β > -1/q.
double best_constant(KernelParams params, ConjugateExponents exps);

} // namespace hilbert
