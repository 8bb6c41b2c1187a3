#pragma once

#include <string>
#include <vector>

// Physical parameter set for the branched half-line oscillators, the
// effective potentials, the E <-> lambda <-> mu maps, the Hermite
// truncation test, and the exact k = 0 isotonic solution.

namespace emden {

enum class Branch { Plus, Minus };

constexpr double branch_sign(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }
const char* branch_name(Branch b);
Branch branch_from_string(const std::string& s);  // "plus" | "minus"

struct ModelParams {
    double omega = 1.0;    // angular frequency, > 0
    double k = 0.0;        // anharmonicity, >= 0
    double epsilon = 0.25; // ordering parameter eps = 4*alpha*gamma, >= 0
    Branch branch = Branch::Plus;

    // xi0 = sqrt(k/6) * 4 / omega^2; zero iff k = 0.
    double xi0() const;

    /// Throws std::invalid_argument on violated invariants.
    void validate() const;

    /// Non-fatal advisories (e.g. attractive singular term for eps < 1/4).
    std::vector<std::string> warnings() const;

    std::string to_json() const;
    static ModelParams from_json(const std::string& text);
};

// Affine maps between E and the spectral variables lambda and mu:
//   lambda = E/4 + k/(24 w^2),   mu = E/w + k/(6 w^3) - 1/2.
struct EnergyMap {
    double omega, k;

    explicit EnergyMap(const ModelParams& p) : omega(p.omega), k(p.k) {}
    EnergyMap(double omega_, double k_) : omega(omega_), k(k_) {}

    double lambda_of_energy(double e) const { return e / 4.0 + k / (24.0 * omega * omega); }
    double energy_of_lambda(double lam) const { return 4.0 * lam - k / (6.0 * omega * omega); }
    double mu_of_energy(double e) const {
        return e / omega + k / (6.0 * omega * omega * omega) - 0.5;
    }
    double energy_of_mu(double mu) const {
        return omega * (mu + 0.5) - k / (6.0 * omega * omega);
    }
};

/// V_eff(xi) = w^2 (xi -+ xi0)^2 / 64 + (eps - 1/4)/xi^2 - k/(24 w^2), xi > 0.
double effective_potential(const ModelParams& params, double xi);

struct TruncationScan {
    std::vector<int> levels;  // n with H_n(sqrt(w xi0^2 / 8)) ~= 0
    bool degenerate = false;  // k = 0: argument is exactly 0, all odd n qualify
};

/// Scan n <= n_max for the polynomial-truncation condition (eps = 1/4
/// construction; eps is ignored). n_max <= 200.
TruncationScan hermite_truncation_scan(const ModelParams& params, int n_max);

/// Exact isotonic (k = 0) energy w(2n + sqrt(eps) + 1).
double isotonic_exact_energy(int n, double omega, double epsilon);

/// Exact normalized k = 0 eigenfunction at xi >= 0.
double isotonic_eigenfunction(int n, double omega, double epsilon, double xi);

}  // namespace emden
