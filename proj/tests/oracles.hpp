#pragma once

// Test-only oracles, independent of the library's evaluation paths.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "emden/model.hpp"

namespace oracles {

// Associated Laguerre via the hypergeometric series
//   L_n^a(t) = [(a+1)_n / n!] * sum_j (-n)_j / (a+1)_j * t^j / j!,
// an independent route against the library's three-term recurrence.
inline double laguerre_series(int n, double alpha, double t) {
    // extended-precision accumulation: the alternating sum cancels by a few
    // orders at n ~ 30 and the oracle must stay ahead of the recurrence
    long double pref = 1.0L;
    for (int m = 0; m < n; ++m) pref *= (alpha + 1.0L + m) / (m + 1.0L);
    long double term = 1.0L, sum = 1.0L;
    for (int j = 0; j < n; ++j) {
        term *= (-(n - j)) / ((alpha + 1.0L + j) * (j + 1.0L)) * t;
        sum += term;
    }
    return static_cast<double>(pref * sum);
}

// Composite Simpson with interval doubling; the absolute floor covers
// integrals that vanish (orthogonality checks).
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double rel_tol = 1e-12, double abs_tol = 1e-15) {
    double prev = 0.0;
    for (int m = 64; m <= (1 << 22); m *= 2) {
        const double h = (b - a) / m;
        double sum = f(a) + f(b);
        for (int i = 1; i < m; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
        const double cur = sum * h / 3.0;
        if (m > 64 && std::abs(cur - prev) <= std::max(rel_tol * std::abs(cur), abs_tol))
            return cur;
        prev = cur;
    }
    throw std::runtime_error("oracles::simpson: no convergence");
}

// Shooting oracle for the eps = 1/4 half-line problem in the lambda
// variable: RK4 integration of phi'' = (W - lambda) phi from phi(0) = 0,
// phi'(0) = 1; eigenvalues are roots of phi(xi_max; lambda).
inline double shoot_boundary_value(const emden::ModelParams& p, double lambda, double xi_max,
                                   int n_steps) {
    const auto wpot = [&](double xi) {
        const double c = xi - emden::branch_sign(p.branch) * p.xi0();
        return p.omega * p.omega * c * c / 64.0;
    };
    const double h = xi_max / n_steps;
    double phi = 0.0, dphi = 1.0, xi = 0.0;
    for (int i = 0; i < n_steps; ++i) {
        const auto acc = [&](double x, double f) { return (wpot(x) - lambda) * f; };
        const double k1f = dphi, k1d = acc(xi, phi);
        const double k2f = dphi + 0.5 * h * k1d, k2d = acc(xi + 0.5 * h, phi + 0.5 * h * k1f);
        const double k3f = dphi + 0.5 * h * k2d, k3d = acc(xi + 0.5 * h, phi + 0.5 * h * k2f);
        const double k4f = dphi + h * k3d, k4d = acc(xi + h, phi + h * k3f);
        phi += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        dphi += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        xi += h;
        // keep the growing solution in range; rescaling preserves the
        // boundary-value sign
        const double mag = std::max(std::abs(phi), std::abs(dphi));
        if (mag > 1e250) {
            phi /= mag;
            dphi /= mag;
        }
    }
    return phi;
}

// Refine an eigenvalue of the shooting problem inside a bracket known to
// contain exactly one sign change of the boundary value.
inline double shoot_eigenvalue(const emden::ModelParams& p, double lam_lo, double lam_hi,
                               double xi_max, int n_steps = 8000) {
    double flo = shoot_boundary_value(p, lam_lo, xi_max, n_steps);
    const double fhi = shoot_boundary_value(p, lam_hi, xi_max, n_steps);
    if (flo * fhi >= 0.0) throw std::runtime_error("shoot_eigenvalue: bracket does not enclose");
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lam_lo + lam_hi);
        const double fm = shoot_boundary_value(p, mid, xi_max, n_steps);
        if (flo * fm <= 0.0) {
            lam_hi = mid;
        } else {
            lam_lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lam_lo + lam_hi);
}

}  // namespace oracles
