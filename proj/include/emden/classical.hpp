#pragma once

#include <functional>
#include <string>
#include <vector>

#include "emden/model.hpp"

// Classical-side verification: RK4 integration of the modified Emden
// equation, period detection (isochronicity), the map to the branched
// canonical picture, and evolution under the branched Hamiltonians.

namespace emden {

struct ClassicalState {
    double x = 0.0;  // position
    double v = 0.0;  // velocity
    double t = 0.0;
};

struct HamiltonianState {
    double x = 0.0;
    double p = 0.0;  // canonical momentum, strictly < 0
    Branch branch = Branch::Plus;
};

struct HamiltonianSample {
    double t = 0.0;
    double x = 0.0;
    double p = 0.0;
    double h = 0.0;  // conserved energy along the flow
};

/// Fixed-step RK4 trajectory of x'' + k x x' + w^2 x + (k^2/9) x^3 = 0.
/// Requires dt <= (2 pi / w)/200; aborts (std::runtime_error) on |x| > 1e8.
std::vector<ClassicalState> integrate_emden(double x0, double v0, const ModelParams& params,
                                            double t_end, double dt);

/// Mean time between successive maxima of x, located by cubic Hermite
/// interpolation of the v zero-crossings with dv/dt < 0. Throws
/// std::runtime_error with fewer than two maxima.
double detect_period(const std::vector<ClassicalState>& trajectory, const ModelParams& params);

/// Canonical image of (x, v): u = v + 3 w^2/k + k x^2/3, p = -1/(2 u^2),
/// branch = Plus iff u > 0. Requires k > 0; throws std::domain_error at u = 0.
HamiltonianState emden_to_canonical(const ClassicalState& state, const ModelParams& params);

/// Velocity recovered from Hamilton's equation dx/dt = dH^{branch}/dp.
double canonical_velocity(const HamiltonianState& state, const ModelParams& params);

/// Hamiltonian value H^{+-} = -3 p (k x^2/9 + w^2/k) -+ sqrt(-2p).
double hamiltonian_value(const HamiltonianState& state, const ModelParams& params);

/// RK4 flow of dx/dt = -(k x^2/3 + 3 w^2/k) +- 1/sqrt(-2p), dp/dt = (2k/3) p x.
/// Aborts (std::runtime_error) when p approaches 0^- or the branch-switch
/// locus u -> 0 (|p| -> inf).
std::vector<HamiltonianSample> integrate_hamiltonian(const HamiltonianState& state,
                                                     const ModelParams& params,
                                                     double t_end, double dt);

/// g(x) = w^2 x + [integral_0^x x' f(x') dx']^2 / x^3 for callable f
/// (adaptive Simpson for the inner integral). Exact polynomial f is handled
/// in polyalgebra; this is the numeric route.
double isochronous_g_value(const std::function<double(double)>& f, double omega, double x);

std::string trajectory_to_csv(const std::vector<ClassicalState>& traj);          // "t,x,v"
std::string trajectory_to_csv(const std::vector<HamiltonianSample>& traj);       // "t,x,p,H"

}  // namespace emden
