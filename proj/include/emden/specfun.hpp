#pragma once

// Self-contained special-function kernel: gamma family, Hermite and
// associated Laguerre polynomials, Kummer's confluent hypergeometric M,
// and the parabolic cylinder function D_mu of real order.
//
// All functions are pure; safe to call concurrently.

namespace emden::specfun {

struct Config {
    double series_tol = 1e-15;  // relative-term stopping tolerance, in (0, 1e-6]
    int max_terms = 500;        // >= 100

    void validate() const;  // throws std::invalid_argument
};

const Config& default_config();

/// ln Gamma(x) for x > 0 (Lanczos). Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// 1/Gamma(x), entire in x; returns exactly 0 at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

/// Rising factorial (a)_j = a(a+1)...(a+j-1), (a)_0 = 1.
double pochhammer(double a, int j);

/// Physicists' Hermite polynomial H_n(x) by three-term recurrence; n <= 200.
double hermite(int n, double x);

/// Largest |H_m(x)| encountered along the recurrence up to m = n (scale
/// reference for zero detection); n <= 200.
double hermite_recurrence_scale(int n, double x);

/// Associated Laguerre polynomial L_n^alpha(t), alpha > -1, t >= 0.
double laguerre_assoc(int n, double alpha, double t);

/// Kummer's M(a, b, z) by power series; |z| <= 50, b not a nonpositive integer.
double kummer_m(double a, double b, double z, const Config& cfg = default_config());

/// Parabolic cylinder function D_mu(z) of real order, |z| <= 50.
double parabolic_cylinder_d(double mu, double z, const Config& cfg = default_config());

}  // namespace emden::specfun
