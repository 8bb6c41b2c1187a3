#include "emden/reference_tables.hpp"

#include <stdexcept>

// Reference eigenvalue tables for omega = 10, k = 1 (data only).
// Table 1: direct numerical spectrum at eps = 1/4.
// Table 2: direct numerical spectrum at eps = 1/2.
// Table 3: first-order perturbation energies at eps = 1/2.

namespace emden::reference {

namespace {

const Table kTables[3] = {
    {1, 10.0, 1.0, 0.25,
     {14.77286544, 34.65936779, 54.57419677, 74.50319290, 94.44103893, 114.38507520},
     {15.18436212, 35.27686069, 55.34619560, 75.40394802, 95.45445609, 115.49988822},
     1e-3},
    {2, 10.0, 1.0, 0.5,
     {16.84868053, 36.75113362, 56.67606076, 76.61285412, 96.55723877, 116.50700377},
     {17.29250939, 37.38995201, 57.46485124, 77.52785010, 97.58322724, 117.63319363},
     1e-3},
    {3, 10.0, 1.0, 0.5,
     {16.856, 36.750, 56.668, 76.603, 96.549, 116.503},
     {17.286, 37.392, 57.474, 77.539, 97.593, 117.639},
     1e-3},
};

}  // namespace

const Table& table(int id) {
    if (id < 1 || id > 3) throw std::out_of_range("reference::table: id must be 1, 2 or 3");
    return kTables[id - 1];
}

}  // namespace emden::reference
