#include "hilbert/kernels.hpp"

#include "hilbert/errors.hpp"
#include "format.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace hilbert {

namespace {

void require_index(std::uint64_t i, std::uint64_t j) {
    if (i == 0 || j == 0) throw DomainError("matrix indices are 1-based; got i=" + std::to_string(i) + " j=" + std::to_string(j));
}

} // namespace

double HomogeneousKernel::operator()(double x, double y) const { return std::exp(log_value(x, y)); }

double HomogeneousKernel::log_value(double x, double y) const {
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("kernel arguments must be positive");
    return params_.alpha * std::log(x) + params_.beta * std::log(y) - decay() * std::log(x + y);
}

double log_h_entry(KernelParams params, std::uint64_t i, std::uint64_t j) {
    require_index(i, j);
    return HomogeneousKernel(params).log_value(static_cast<double>(i), static_cast<double>(j));
}

double h_entry(KernelParams params, std::uint64_t i, std::uint64_t j) { return std::exp(log_h_entry(params, i, j)); }

double log_m_entry(KernelParams params, std::uint64_t i, std::uint64_t j) {
    require_index(i, j);
    const double x = static_cast<double>(i) + 1.0 - params.alpha;
    const double y = static_cast<double>(j) + 1.0 - params.beta;
    if (!(x > 0.0)) throw DomainError("m_entry requires alpha < i+1 (alpha=" + detail::fmt(params.alpha) + ", i=" + std::to_string(i) + ")");
    if (!(y > 0.0)) throw DomainError("m_entry requires beta < j+1 (beta=" + detail::fmt(params.beta) + ", j=" + std::to_string(j) + ")");
    return log_binomial(i + j - 2, j - 1) + log_beta(x, y);
}

double m_entry(KernelParams params, std::uint64_t i, std::uint64_t j) { return std::exp(log_m_entry(params, i, j)); }

CheckReport compare_entrywise(KernelParams params, std::uint64_t search_limit, unsigned threads) {
    if (search_limit == 0) throw DomainError("search_limit must be positive");
    // Index 1 is the binding case for both beta arguments.
    (void)log_m_entry(params, 1, 1);

    const KernelParams mirrored{1.0 - params.alpha, 1.0 - params.beta};

    struct Shard {
        std::uint64_t first_failure = std::numeric_limits<std::uint64_t>::max();
        double fail_h = 0.0, fail_m = 0.0;
        double tightest_gap = std::numeric_limits<double>::infinity();
        std::uint64_t tightest_index = 0;
        double tight_h = 0.0, tight_m = 0.0;
    };

    auto scan = [&](std::uint64_t begin, std::uint64_t end) {
        Shard shard;
        for (std::uint64_t i = begin; i < end; ++i) {
            const double lh = log_h_entry(mirrored, i, i);
            const double lm = log_m_entry(params, i, i);
            const double gap = lm - lh;
            if (gap < shard.tightest_gap) {
                shard.tightest_gap = gap;
                shard.tightest_index = i;
                shard.tight_h = lh;
                shard.tight_m = lm;
            }
            if (lh > lm) {
                shard.first_failure = i;
                shard.fail_h = lh;
                shard.fail_m = lm;
                break;
            }
        }
        return shard;
    };

    const auto shards = detail::parallel_map_ranges<Shard>(1, search_limit + 1, threads, scan);

    CheckReport report;
    report.name = "entrywise_comparison";
    const Shard* failing = nullptr;
    const Shard* tightest = nullptr;
    for (const auto& s : shards) {
        if (s.first_failure != std::numeric_limits<std::uint64_t>::max() &&
            (failing == nullptr || s.first_failure < failing->first_failure)) {
            failing = &s;
        }
        if (tightest == nullptr || s.tightest_gap < tightest->tightest_gap) tightest = &s;
    }

    if (failing != nullptr) {
        report.verdict = Verdict::fail;
        report.checked = failing->first_failure;
        report.lhs = failing->fail_h;
        report.rhs = failing->fail_m;
        report.location = "i=j=" + std::to_string(failing->first_failure);
        report.first_violation = Violation{report.location, report.lhs, report.rhs};
    } else {
        report.verdict = Verdict::pass;
        report.checked = search_limit;
        report.lhs = tightest->tight_h;
        report.rhs = tightest->tight_m;
        report.location = "i=j=" + std::to_string(tightest->tightest_index);
    }
    report.margin = report.rhs - report.lhs;
    report.note = "log H(1-alpha,1-beta)_{i,i} vs log M(alpha,beta)_{i,i}";
    return report;
}

} // namespace hilbert
