#include "emden/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <stdexcept>

#include "emden/detail/json_fmt.hpp"
#include "emden/kernels.hpp"

namespace emden {

void Grid::validate() const {
    if (!(xi_max > 0.0)) throw std::invalid_argument("Grid: xi_max must be > 0");
    if (n_points < 500) throw std::invalid_argument("Grid: n_points must be >= 500");
}

const char* method_name(Method m) {
    switch (m) {
        case Method::FiniteDifference: return "finite_difference";
        case Method::ParabolicCylinder: return "parabolic_cylinder";
        case Method::Perturbation: return "perturbation";
    }
    return "unknown";
}

namespace {

// W(xi) = V_eff(xi) + k/(24 w^2): the potential entering the lambda-variable
// operator -d^2/dxi^2 + W. The energy shift lives solely in EnergyMap.
double lambda_potential(const ModelParams& p, double xi) {
    const double w2 = p.omega * p.omega;
    const double center = xi - branch_sign(p.branch) * p.xi0();
    return w2 * center * center / 64.0 + (p.epsilon - 0.25) / (xi * xi);
}

struct BisectionResult {
    std::vector<double> lambdas;
};

// Lowest n_levels eigenvalues of the tridiagonal operator by Sturm-sequence
// bisection, all levels refined together so the counting kernel runs batched.
BisectionResult sturm_bisect(const Tridiagonal& t, int n_levels) {
    const std::size_t dim = t.diag.size();
    std::vector<double> off_sq(dim - 1, t.off * t.off);

    double lo = t.diag[0], hi = t.diag[0];
    for (double d : t.diag) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    lo -= 2.0 * std::abs(t.off);
    hi += 2.0 * std::abs(t.off);

    std::vector<double> los(n_levels, lo), his(n_levels, hi);
    std::vector<double> mids(n_levels);
    std::vector<int> counts(n_levels);

    const double tol = 1e-12;
    const int max_iter = 200;
    int iter = 0;
    while (true) {
        bool any_active = false;
        for (int l = 0; l < n_levels; ++l) {
            const double width_tol =
                std::max(tol, 8.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(std::abs(los[l]), std::abs(his[l])));
            if (his[l] - los[l] > width_tol) any_active = true;
            mids[l] = 0.5 * (los[l] + his[l]);
        }
        if (!any_active) break;
        if (++iter > max_iter)
            throw std::runtime_error("solve_levels: bisection did not converge (iteration cap)");
        kernels::sturm_counts(t.diag, off_sq, mids, counts);
        for (int l = 0; l < n_levels; ++l) {
            if (counts[l] >= l + 1)
                his[l] = mids[l];
            else
                los[l] = mids[l];
        }
    }

    BisectionResult r;
    r.lambdas.resize(n_levels);
    for (int l = 0; l < n_levels; ++l) r.lambdas[l] = 0.5 * (los[l] + his[l]);
    return r;
}

Tridiagonal build_matrix(const ModelParams& params, double xi_max, int n_points) {
    Tridiagonal t;
    const double h = xi_max / n_points;
    t.off = -1.0 / (h * h);
    t.diag.resize(n_points - 1);
    for (int i = 1; i < n_points; ++i)
        t.diag[i - 1] = 2.0 / (h * h) + lambda_potential(params, i * h);
    return t;
}

}  // namespace

Tridiagonal discretize(const ModelParams& params, const Grid& grid) {
    params.validate();
    grid.validate();
    return build_matrix(params, grid.xi_max, grid.n_points);
}

Grid default_domain(const ModelParams& params, int n_levels) {
    params.validate();
    const double e_est = isotonic_exact_energy(n_levels + 4, params.omega, params.epsilon);
    const double lam_est = EnergyMap(params).lambda_of_energy(e_est);
    Grid g;
    g.xi_max = params.xi0() + (8.0 / params.omega) * std::sqrt(2.0 * lam_est);
    g.n_points = 4000;
    return g;
}

Spectrum solve_levels(const ModelParams& params, const Grid& grid, int n_levels,
                      bool richardson) {
    params.validate();
    grid.validate();
    if (n_levels < 1 || n_levels > 20)
        throw std::invalid_argument("solve_levels: n_levels must be in [1, 20]");

    // the domain must confine the highest requested level
    const double lam_top =
        EnergyMap(params).lambda_of_energy(isotonic_exact_energy(n_levels, params.omega, params.epsilon));
    if (lambda_potential(params, grid.xi_max) < lam_top)
        throw std::invalid_argument("solve_levels: domain too small, V_eff(xi_max) below the "
                                    "requested spectral range");

    const EnergyMap map(params);
    Spectrum s;
    s.params = params;
    s.method = Method::FiniteDifference;
    s.grid = grid;
    s.richardson = richardson;

    const auto coarse = sturm_bisect(build_matrix(params, grid.xi_max, grid.n_points), n_levels);
    if (!richardson) {
        for (double lam : coarse.lambdas) s.energies.push_back(map.energy_of_lambda(lam));
        return s;
    }
    const auto fine = sturm_bisect(build_matrix(params, grid.xi_max, 2 * grid.n_points), n_levels);
    for (int l = 0; l < n_levels; ++l) {
        const double lam = (4.0 * fine.lambdas[l] - coarse.lambdas[l]) / 3.0;
        s.energies.push_back(map.energy_of_lambda(lam));
        s.est_error.push_back(4.0 * std::abs(fine.lambdas[l] - coarse.lambdas[l]) / 3.0);
    }
    return s;
}

namespace {

// LU with partial pivoting for a tridiagonal system (LAPACK dgttrf/dgtts2
// layout); zero pivots are replaced by a tiny value, which is the standard
// inverse-iteration convention.
struct TridiagLU {
    std::vector<double> dl, d, du, du2;
    std::vector<int> swapped;

    explicit TridiagLU(const Tridiagonal& t, double shift)
        : dl(t.diag.size() - 1, t.off),
          d(t.diag),
          du(t.diag.size() - 1, t.off),
          du2(t.diag.size() >= 2 ? t.diag.size() - 2 : 0, 0.0),
          swapped(t.diag.size() - 1, 0) {
        const std::size_t n = d.size();
        for (std::size_t i = 0; i < n; ++i) d[i] -= shift;
        const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(d[i]) >= std::abs(dl[i])) {
                if (d[i] == 0.0) d[i] = tiny;
                const double fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
                if (i + 2 < n) du2[i] = 0.0;
            } else {
                const double fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                const double tmp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = tmp - fact * d[i + 1];
                if (i + 2 < n) {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                swapped[i] = 1;
            }
        }
        if (d[n - 1] == 0.0) d[n - 1] = tiny;
    }

    void solve(std::vector<double>& b) const {
        const std::size_t n = d.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!swapped[i]) {
                b[i + 1] -= dl[i] * b[i];
            } else {
                const double tmp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = tmp - dl[i] * b[i];
            }
        }
        b[n - 1] /= d[n - 1];
        if (n >= 2) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
        for (std::size_t ip = n; ip >= 3; --ip) {
            const std::size_t i = ip - 3;
            b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
        }
    }
};

}  // namespace

EigenfunctionTable eigenfunction(const ModelParams& params, const Grid& grid, int n) {
    if (n < 0) throw std::invalid_argument("eigenfunction: n must be >= 0");
    const Spectrum levels = solve_levels(params, grid, n + 1, false);
    const double lam = EnergyMap(params).lambda_of_energy(levels.energies[n]);

    const Tridiagonal t = build_matrix(params, grid.xi_max, grid.n_points);
    const TridiagLU lu(t, lam);
    const std::size_t dim = t.diag.size();

    std::vector<double> x(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    const double op_scale = 4.0 / (grid.h() * grid.h()) + std::abs(lam);
    bool converged = false;
    for (int iter = 0; iter < 8; ++iter) {
        lu.solve(x);
        const double norm = std::sqrt(kernels::dot(x, x));
        for (double& v : x) v /= norm;
        // residual ||(T - lam) x|| relative to the operator scale
        double res2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            double r = (t.diag[i] - lam) * x[i];
            if (i > 0) r += t.off * x[i - 1];
            if (i + 1 < dim) r += t.off * x[i + 1];
            res2 += r * r;
        }
        if (std::sqrt(res2) <= 1e-10 * op_scale) {
            converged = true;
            break;
        }
    }
    if (!converged) throw std::runtime_error("eigenfunction: inverse iteration stagnated");

    EigenfunctionTable table;
    table.grid = grid;
    table.n = n;
    table.values.assign(grid.n_points + 1, 0.0);
    std::copy(x.begin(), x.end(), table.values.begin() + 1);

    // trapezoid normalization (Dirichlet ends contribute nothing)
    const double h = grid.h();
    const double nrm = std::sqrt(h * kernels::dot(x, x));
    for (double& v : table.values) v /= nrm;

    // sign convention: the first extremum after xi = 0 is positive; the
    // profile rises monotonically into its first lobe, so the sign at the
    // first清 point above 10% of the peak matches the extremum sign
    double peak = 0.0;
    for (double v : table.values) peak = std::max(peak, std::abs(v));
    for (double v : table.values) {
        if (std::abs(v) > 0.1 * peak) {
            if (v < 0.0)
                for (double& w : table.values) w = -w;
            break;
        }
    }
    table.values.front() = 0.0;  // keep the Dirichlet nodes at +0
    table.values.back() = 0.0;
    table.normalized = true;
    if (table.interior_nodes() != n)
        throw std::runtime_error("eigenfunction: eigenvector for level " + std::to_string(n) +
                                 " has " + std::to_string(table.interior_nodes()) +
                                 " interior nodes (grid too coarse?)");
    return table;
}

int EigenfunctionTable::interior_nodes() const {
    double peak = 0.0;
    for (double v : values) peak = std::max(peak, std::abs(v));
    const double floor = 1e-9 * peak;
    int sign = 0, changes = 0;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        if (std::abs(values[i]) <= floor) continue;
        const int s = values[i] > 0.0 ? 1 : -1;
        if (sign != 0 && s != sign) ++changes;
        sign = s;
    }
    return changes;
}

std::string Spectrum::to_json() const {
    std::ostringstream os;
    os << "{\"params\":" << params.to_json() << ",\"method\":\"" << method_name(method) << "\"";
    os << ",\"energies\":[";
    for (std::size_t i = 0; i < energies.size(); ++i)
        os << (i ? "," : "") << detail::fmt_g12(energies[i]);
    os << "],\"grid\":{\"xi_max\":" << detail::fmt_g12(grid.xi_max)
       << ",\"n_points\":" << grid.n_points << ",\"richardson\":" << (richardson ? "true" : "false")
       << "},\"est_error\":[";
    for (std::size_t i = 0; i < est_error.size(); ++i)
        os << (i ? "," : "") << detail::fmt_g12(est_error[i]);
    os << "]}";
    return os.str();
}

std::string Spectrum::to_csv() const {
    std::ostringstream os;
    os << "n,energy,est_error\n";
    for (std::size_t i = 0; i < energies.size(); ++i) {
        os << i << "," << detail::fmt_g12(energies[i]) << ",";
        if (i < est_error.size()) os << detail::fmt_g12(est_error[i]);
        os << "\n";
    }
    return os.str();
}

std::string EigenfunctionTable::to_json() const {
    std::ostringstream os;
    os << "{\"grid\":{\"xi_max\":" << detail::fmt_g12(grid.xi_max)
       << ",\"n_points\":" << grid.n_points << "},\"n\":" << n
       << ",\"normalized\":" << (normalized ? "true" : "false") << ",\"values\":[";
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? "," : "") << detail::fmt_g12(values[i]);
    os << "]}";
    return os.str();
}

std::string EigenfunctionTable::to_csv() const {
    std::ostringstream os;
    os << "xi,phi\n";
    const double h = grid.h();
    for (std::size_t i = 0; i < values.size(); ++i)
        os << detail::fmt_g12(i * h) << "," << detail::fmt_g12(values[i]) << "\n";
    return os.str();
}

}  // namespace emden
