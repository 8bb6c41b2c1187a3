#pragma once

#include <cstdio>
#include <string>

// Shared output formatting: floats are printed with 12 significant digits so
// repeated runs produce byte-identical JSON/CSV.

namespace emden::detail {

inline std::string fmt_g12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace emden::detail
