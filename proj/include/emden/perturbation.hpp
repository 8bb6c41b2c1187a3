#pragma once

#include <string>
#include <vector>

#include "emden/model.hpp"

// First-order (O(sqrt(k))) perturbation theory on the exact isotonic basis:
// closed-form double sum for the first moment <xi>, an independent
// quadrature oracle, corrected energies, and the smallness bound.

namespace emden {

struct PerturbationResult {
    int n = 0;
    double e0 = 0.0;      // unperturbed w(2n + sqrt(eps) + 1)
    double moment = 0.0;  // integral of xi * phi_n(xi)^2 over (0, inf)
    double delta = 0.0;   // -+ sqrt(k/24) * moment, sign by branch
    double e1 = 0.0;      // e0 + delta
    bool valid = false;   // k within two decades of the smallness bound
};

/// Closed-form first moment via the Laguerre double sum, evaluated in
/// log-magnitude/sign form with compensated summation. n <= 60.
double first_moment_closed(int n, double epsilon, double omega);

/// Adaptive composite-Simpson evaluation of the same moment (oracle route).
double first_moment_quadrature(int n, double epsilon, double omega);

/// First-order corrected energies for levels 0..n_levels-1 on params.branch.
std::vector<PerturbationResult> corrected_energies(const ModelParams& params, int n_levels);

/// 3 w^3 / (n_max + sqrt(eps)); the `valid` flag requires k <= bound/100.
double smallness_bound(double omega, double epsilon, int n_max);

std::string perturbation_to_json(const ModelParams& params,
                                 const std::vector<PerturbationResult>& results);

/// CSV with header "n,e0,delta_plus,e1_plus,e1_minus" (branch-paired view).
std::string perturbation_to_csv(const std::vector<PerturbationResult>& plus_branch);

}  // namespace emden
