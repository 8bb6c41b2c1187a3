#pragma once

#include <array>

// Published reference eigenvalues being reproduced (omega = 10, k = 1).
// Data only; regression tolerances pinned alongside.

namespace emden::reference {

struct Table {
    int id;                          // 1, 2, 3
    double omega, k, epsilon;
    std::array<double, 6> plus;      // E_n^+, n = 0..5
    std::array<double, 6> minus;     // E_n^-
    double tolerance;                // acceptance bound on max |deviation|
};

const Table& table(int id);  // throws std::out_of_range for id outside 1..3

}  // namespace emden::reference
