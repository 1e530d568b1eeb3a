#pragma once

#include <sstream>
#include <string>

namespace hilbert::detail {

/// Round-trip decimal form of a double, for messages and locations.
inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace hilbert::detail
