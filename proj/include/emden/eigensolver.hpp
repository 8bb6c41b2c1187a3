#pragma once

#include <string>
#include <vector>

#include "emden/model.hpp"

// Direct numerical solution of the half-line eigenproblems with Dirichlet
// conditions: second-order central differences, Sturm-sequence bisection,
// optional Richardson extrapolation, inverse-iteration eigenfunctions.

namespace emden {

struct Grid {
    double xi_max = 1.0;  // > 0
    int n_points = 4000;  // >= 500; interior nodes xi_i = i*h, i = 1..n_points-1

    double h() const { return xi_max / n_points; }
    void validate() const;
};

// Symmetric tridiagonal operator with constant off-diagonal (the -1/h^2
// stencil); diag holds 2/h^2 + W(xi_i) in the lambda variable.
struct Tridiagonal {
    std::vector<double> diag;
    double off = 0.0;
};

enum class Method { FiniteDifference, ParabolicCylinder, Perturbation };
const char* method_name(Method m);

struct Spectrum {
    ModelParams params;
    Method method = Method::FiniteDifference;
    std::vector<double> energies;     // E_n, strictly increasing
    Grid grid;
    bool richardson = false;
    std::vector<double> est_error;    // per level; empty unless richardson

    std::string to_json() const;
    std::string to_csv() const;       // header "n,energy,est_error"
};

struct EigenfunctionTable {
    Grid grid;
    int n = 0;                        // level index
    std::vector<double> values;       // n_points+1 samples, xi = 0..xi_max
    bool normalized = false;          // unit trapezoid L2 norm

    int interior_nodes() const;       // sign changes on the open interval
    std::string to_json() const;
    std::string to_csv() const;       // header "xi,phi"
};

/// Central-difference matrix for -d^2/dxi^2 + W(xi) in the lambda variable,
/// W = V_eff + k/(24 w^2).
Tridiagonal discretize(const ModelParams& params, const Grid& grid);

/// Lowest n_levels eigenvalues by Sturm bisection, reported in E. With
/// richardson, recomputes at 2*n_points and extrapolates (4 E_2N - E_N)/3.
/// n_levels <= 20. Throws std::invalid_argument when the domain cannot
/// confine the requested levels (W(xi_max) below the spectral range).
Spectrum solve_levels(const ModelParams& params, const Grid& grid, int n_levels,
                      bool richardson = true);

/// Inverse-iteration eigenvector for level n, trapezoid-normalized, sign
/// fixed so the first extremum after xi = 0 is positive.
EigenfunctionTable eigenfunction(const ModelParams& params, const Grid& grid, int n);

/// Domain large enough for n_levels bound states: xi_max = xi0 +
/// (8/w) sqrt(2 lambda_est) with lambda_est from the isotonic estimate at
/// level n_levels + 4; n_points = 4000.
Grid default_domain(const ModelParams& params, int n_levels);

}  // namespace emden
