#include "hilbert/report.hpp"

namespace hilbert {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::unasserted: return "unasserted";
    }
    return "unknown";
}

} // namespace hilbert
