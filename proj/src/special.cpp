#include "hilbert/special.hpp"

#include "hilbert/errors.hpp"
#include "format.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace hilbert {

namespace {

// Lanczos approximation with g = 7 and nine terms:
//   Γ(x) = √(2π) (x+g-½)^{x-½} e^{-(x+g-½)} A(x),  A(x) = c0 + Σ c_k / (x-1+k),
// accurate to ~1e-15 relative for x >= ½.
constexpr long double kLanczosG = 7.0L;
constexpr std::array<long double, 9> kLanczosCoeffs = {
    0.99999999999980993227684700473478L,  676.520368121885098567009190444019L,
    -1259.13921672240287047156078755283L, 771.3234287776530788486528258894L,
    -176.61502916214059906584551354L,     12.507343278686904814458936853L,
    -0.13857109526572011689554707L,       9.984369578019570859563e-6L,
    1.50563273514931155834e-7L,
};
constexpr long double kHalfLog2Pi = 0.918938533204672741780329736405617639861L;

long double lanczos_sum(long double x) {
    long double sum = kLanczosCoeffs[0];
    for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
        sum += kLanczosCoeffs[k] / (x - 1.0L + static_cast<long double>(k));
    }
    return sum;
}

long double log_gamma_ld(long double x) {
    if (x < 0.5L) return log_gamma_ld(x + 1.0L) - std::log(x);
    const long double t = x + kLanczosG - 0.5L;
    return kHalfLog2Pi + (x - 0.5L) * std::log(t) - t + std::log(lanczos_sum(x));
}

// ln B(x, y) in ratio form: the large powers (x+g-½)^{x-½} etc. are combined
// into log1p terms so that no ln Γ of a large argument is ever subtracted.
long double log_beta_ld(long double x, long double y) {
    if (x < 0.5L) return log_beta_ld(x + 1.0L, y) + std::log((x + y) / x);
    if (y < 0.5L) return log_beta_ld(x, y + 1.0L) + std::log((x + y) / y);
    const long double c = x + y + kLanczosG - 0.5L;
    return kHalfLog2Pi + (0.5L - kLanczosG) + std::log(lanczos_sum(x)) + std::log(lanczos_sum(y)) -
           std::log(lanczos_sum(x + y)) + (x - 0.5L) * std::log1p(-y / c) + (y - 0.5L) * std::log1p(-x / c) -
           0.5L * std::log(c);
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be a finite positive number, got " + detail::fmt(v));
    }
}

} // namespace

ConjugateExponents ConjugateExponents::from_p(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw DomainError("exponent p must satisfy p > 1, got " + detail::fmt(p));
    }
    return {p, p / (p - 1.0)};
}

double log_gamma(double x) {
    require_positive(x, "log_gamma argument");
    return static_cast<double>(log_gamma_ld(x));
}

double log_beta(double x, double y) {
    require_positive(x, "beta argument x");
    require_positive(y, "beta argument y");
    return static_cast<double>(log_beta_ld(x, y));
}

double beta(double x, double y) {
    require_positive(x, "beta argument x");
    require_positive(y, "beta argument y");
    return static_cast<double>(std::exp(log_beta_ld(x, y)));
}

double log_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw DomainError("log_binomial requires k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    if (k == 0 || k == n) return 0.0;
    // C(n, k) = 1 / ((n+1) B(k+1, n-k+1))
    const auto nl = static_cast<long double>(n);
    const auto kl = static_cast<long double>(k);
    return static_cast<double>(-std::log(nl + 1.0L) - log_beta_ld(kl + 1.0L, nl - kl + 1.0L));
}

double best_constant(KernelParams params, ConjugateExponents exps) {
    const double x = params.alpha + 1.0 / exps.p();
    const double y = params.beta + 1.0 / exps.q();
    if (!(x > 0.0)) {
        throw DomainError("best_constant requires alpha > -1/p (alpha=" + detail::fmt(params.alpha) +
                          ", p=" + detail::fmt(exps.p()) + ")");
    }
    if (!(y > 0.0)) {
        throw DomainError("best_constant requires beta > -1/q (beta=" + detail::fmt(params.beta) +
                          ", q=" + detail::fmt(exps.q()) + ")");
    }
    return beta(x, y);
}

} // namespace hilbert
