#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hilbert {

enum class Verdict {
    pass,
    fail,
    inconclusive, // the check could not decide (e.g. enclosure straddles the bound)
    unasserted,   // exploratory run outside a hypothesis; values only
};

std::string_view to_string(Verdict v);

struct Violation {
    std::string location;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Outcome of one inequality check. `lhs <= rhs` is the claim; `margin = rhs - lhs`
/// at the decisive point (the first violation, or the tightest point on success).
struct CheckReport {
    std::string name;
    Verdict verdict = Verdict::pass;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    std::string location;
    std::uint64_t checked = 0;
    std::optional<Violation> first_violation;
    std::string note;

    [[nodiscard]] bool passed() const noexcept { return verdict == Verdict::pass; }
};

} // namespace hilbert
