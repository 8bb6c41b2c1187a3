#include "emden/perturbation.hpp"

#include <gmpxx.h>

#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "emden/detail/json_fmt.hpp"
#include "emden/model.hpp"
#include "emden/specfun.hpp"

namespace emden {

namespace {

// Alternating Laguerre double sum
//   B = sum_{j,l=0}^{n} (-n)_j (-n)_l (se+3/2)_{j+l} / [(se+1)_j (se+1)_l j! l!].
// The terms grow like 4^n while B stays O(1), so the sum cancels by up to
// ~2^120 at n = 60; 320-bit floats absorb that entirely and the only
// irrational input, se = sqrt(eps), enters through exact Pochhammer products.
double laguerre_bracket(int n, double epsilon) {
    constexpr int kPrec = 320;
    const mpf_class se(sqrt(mpf_class(epsilon, kPrec)), kPrec);

    std::vector<mpf_class> rising_a(n + 1), rising_c(2 * n + 1), falling(n + 1), fact(n + 1);
    mpf_class acc(1, kPrec);
    for (int j = 0; j <= n; ++j) {           // (se+1)_j
        rising_a[j] = acc;
        acc *= se + (j + 1);
    }
    acc = 1;
    for (int s = 0; s <= 2 * n; ++s) {       // (se+3/2)_s
        rising_c[s] = acc;
        acc *= se + mpf_class(2 * s + 3, kPrec) / 2;
    }
    acc = 1;
    for (int j = 0; j <= n; ++j) {           // |(-n)_j| = n!/(n-j)!
        falling[j] = acc;
        acc *= n - j;
    }
    acc = 1;
    for (int j = 0; j <= n; ++j) {           // j!
        fact[j] = acc;
        acc *= j + 1;
    }

    mpf_class sum(0, kPrec), max_term(0, kPrec);
    for (int j = 0; j <= n; ++j) {
        for (int l = 0; l <= n; ++l) {
            mpf_class term(falling[j] * falling[l] * rising_c[j + l], kPrec);
            term /= rising_a[j] * rising_a[l] * fact[j] * fact[l];
            if (term > max_term) max_term = term;
            if ((j + l) % 2 != 0)
                sum -= term;
            else
                sum += term;
        }
    }
    if (sum != 0 && max_term > abs(sum) * mpf_class(1e80, kPrec))
        std::cerr << "first_moment_closed: conditioning warning, cancellation exceeds the "
                     "carried precision at n=" << n << "\n";
    return sum.get_d();
}

}  // namespace

double first_moment_closed(int n, double epsilon, double omega) {
    if (n < 0) throw std::invalid_argument("first_moment_closed: n must be >= 0");
    if (n > 60) throw std::invalid_argument("first_moment_closed: n must be <= 60");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("first_moment_closed: epsilon must be >= 0");
    if (!(omega > 0.0)) throw std::invalid_argument("first_moment_closed: omega must be > 0");
    const double se = std::sqrt(epsilon);
    // (w/8)^(-1/2) * Gamma(se+3/2) * Gamma(se+1+n) / (n! Gamma(se+1)^2), all
    // positive, assembled in logs
    const double log_pref = -0.5 * std::log(omega / 8.0) + specfun::log_gamma(se + 1.5) +
                            specfun::log_gamma(se + 1.0 + n) - specfun::log_gamma(n + 1.0) -
                            2.0 * specfun::log_gamma(se + 1.0);
    return std::exp(log_pref) * laguerre_bracket(n, epsilon);
}

double first_moment_quadrature(int n, double epsilon, double omega) {
    if (n < 0) throw std::invalid_argument("first_moment_quadrature: n must be >= 0");
    if (!(omega > 0.0))
        throw std::invalid_argument("first_moment_quadrature: omega must be > 0");
    // cut where the Gaussian tail is far below 1e-14 of the total
    const double xi_cut = std::sqrt(8.0 * (45.0 + 5.0 * n) / omega);
    const auto integrand = [&](double xi) {
        const double phi = isotonic_eigenfunction(n, omega, epsilon, xi);
        return xi * phi * phi;
    };
    double prev = 0.0;
    for (int m = 128; m <= (1 << 22); m *= 2) {
        const double h = xi_cut / m;
        double sum = integrand(0.0) + integrand(xi_cut);
        for (int i = 1; i < m; ++i) sum += (i % 2 ? 4.0 : 2.0) * integrand(i * h);
        const double cur = sum * h / 3.0;
        if (m > 128 && std::abs(cur - prev) < 1e-12 * std::abs(cur)) return cur;
        prev = cur;
    }
    throw std::runtime_error("first_moment_quadrature: refinement cap exceeded");
}

double smallness_bound(double omega, double epsilon, int n_max) {
    if (!(omega > 0.0)) throw std::invalid_argument("smallness_bound: omega must be > 0");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("smallness_bound: epsilon must be >= 0");
    if (n_max < 0) throw std::invalid_argument("smallness_bound: n_max must be >= 0");
    return 3.0 * omega * omega * omega / (n_max + std::sqrt(epsilon));
}

std::vector<PerturbationResult> corrected_energies(const ModelParams& params, int n_levels) {
    params.validate();
    if (n_levels < 1) throw std::invalid_argument("corrected_energies: n_levels must be >= 1");
    std::vector<PerturbationResult> out;
    out.reserve(n_levels);
    const double shift_scale = std::sqrt(params.k / 24.0);
    for (int n = 0; n < n_levels; ++n) {
        PerturbationResult r;
        r.n = n;
        r.e0 = isotonic_exact_energy(n, params.omega, params.epsilon);
        r.moment = first_moment_closed(n, params.epsilon, params.omega);
        r.delta = -branch_sign(params.branch) * shift_scale * r.moment;
        r.e1 = r.e0 + r.delta;
        r.valid = params.k <= smallness_bound(params.omega, params.epsilon, n) / 100.0;
        out.push_back(r);
    }
    return out;
}

std::string perturbation_to_json(const ModelParams& params,
                                 const std::vector<PerturbationResult>& results) {
    std::ostringstream os;
    os << "{\"params\":" << params.to_json() << ",\"method\":\"perturbation\",\"levels\":[";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        os << (i ? "," : "") << "{\"n\":" << r.n << ",\"e0\":" << detail::fmt_g12(r.e0)
           << ",\"moment\":" << detail::fmt_g12(r.moment)
           << ",\"delta\":" << detail::fmt_g12(r.delta) << ",\"e1\":" << detail::fmt_g12(r.e1)
           << ",\"valid\":" << (r.valid ? "true" : "false") << "}";
    }
    os << "]}";
    return os.str();
}

std::string perturbation_to_csv(const std::vector<PerturbationResult>& plus_branch) {
    std::ostringstream os;
    os << "n,e0,delta_plus,e1_plus,e1_minus\n";
    for (const auto& r : plus_branch) {
        os << r.n << "," << detail::fmt_g12(r.e0) << "," << detail::fmt_g12(r.delta) << ","
           << detail::fmt_g12(r.e1) << "," << detail::fmt_g12(r.e0 - r.delta) << "\n";
    }
    return os.str();
}

}  // namespace emden
