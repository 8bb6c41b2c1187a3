#include "emden/classical.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "emden/detail/json_fmt.hpp"

namespace emden {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

double emden_accel(double x, double v, const ModelParams& p) {
    return -(p.k * x * v + p.omega * p.omega * x + (p.k * p.k / 9.0) * x * x * x);
}

void check_step(const ModelParams& p, double t_end, double dt) {
    if (!(dt > 0.0) || !(t_end > 0.0))
        throw std::invalid_argument("integrate: t_end and dt must be positive");
    if (dt > (kTwoPi / p.omega) / 200.0)
        throw std::invalid_argument("integrate: dt must be <= (2 pi / omega)/200");
}

}  // namespace

std::vector<ClassicalState> integrate_emden(double x0, double v0, const ModelParams& params,
                                            double t_end, double dt) {
    params.validate();
    check_step(params, t_end, dt);
    const int n_steps = static_cast<int>(std::llround(t_end / dt));
    std::vector<ClassicalState> traj;
    traj.reserve(n_steps + 1);
    double x = x0, v = v0;
    traj.push_back({x, v, 0.0});
    for (int i = 0; i < n_steps; ++i) {
        const double k1x = v, k1v = emden_accel(x, v, params);
        const double k2x = v + 0.5 * dt * k1v, k2v = emden_accel(x + 0.5 * dt * k1x, v + 0.5 * dt * k1v, params);
        const double k3x = v + 0.5 * dt * k2v, k3v = emden_accel(x + 0.5 * dt * k2x, v + 0.5 * dt * k2v, params);
        const double k4x = v + dt * k3v, k4v = emden_accel(x + dt * k3x, v + dt * k3v, params);
        x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if (std::abs(x) > 1e8)
            throw std::runtime_error("integrate_emden: |x| exceeded the overflow guard");
        traj.push_back({x, v, (i + 1) * dt});
    }
    return traj;
}

double detect_period(const std::vector<ClassicalState>& trajectory, const ModelParams& params) {
    if (trajectory.size() < 4)
        throw std::runtime_error("detect_period: trajectory too short");

    std::vector<double> maxima_times;
    for (std::size_t i = 0; i + 1 < trajectory.size(); ++i) {
        const auto& s0 = trajectory[i];
        const auto& s1 = trajectory[i + 1];
        if (!(s0.v > 0.0 && s1.v <= 0.0)) continue;  // downward v crossing = maximum of x
        const double dt = s1.t - s0.t;
        const double a0 = emden_accel(s0.x, s0.v, params);
        const double a1 = emden_accel(s1.x, s1.v, params);
        // cubic Hermite interpolant of v on [t_i, t_i+1]; bisect for the root
        const auto v_of = [&](double u) {
            const double u2 = u * u, u3 = u2 * u;
            return (2 * u3 - 3 * u2 + 1) * s0.v + (u3 - 2 * u2 + u) * dt * a0 +
                   (-2 * u3 + 3 * u2) * s1.v + (u3 - u2) * dt * a1;
        };
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (v_of(mid) > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        const double u = 0.5 * (lo + hi);
        // accept only genuine maxima (v decreasing through zero)
        const double vdot = a0 + u * (a1 - a0);
        if (vdot < 0.0) maxima_times.push_back(s0.t + u * dt);
    }
    if (maxima_times.size() < 2)
        throw std::runtime_error("detect_period: insufficient v zero-crossings");
    return (maxima_times.back() - maxima_times.front()) / (maxima_times.size() - 1);
}

HamiltonianState emden_to_canonical(const ClassicalState& state, const ModelParams& params) {
    params.validate();
    if (!(params.k > 0.0))
        throw std::invalid_argument("emden_to_canonical: requires k > 0 (k = 0 is singular)");
    const double u = state.v + 3.0 * params.omega * params.omega / params.k +
                     params.k * state.x * state.x / 3.0;
    if (u == 0.0)
        throw std::domain_error("emden_to_canonical: singular map, u = 0");
    HamiltonianState h;
    h.x = state.x;
    h.p = -1.0 / (2.0 * u * u);
    h.branch = u > 0.0 ? Branch::Plus : Branch::Minus;
    return h;
}

double canonical_velocity(const HamiltonianState& state, const ModelParams& params) {
    const double w2 = params.omega * params.omega;
    return -(params.k * state.x * state.x / 3.0 + 3.0 * w2 / params.k) +
           branch_sign(state.branch) / std::sqrt(-2.0 * state.p);
}

double hamiltonian_value(const HamiltonianState& state, const ModelParams& params) {
    const double w2 = params.omega * params.omega;
    return -3.0 * state.p * (params.k * state.x * state.x / 9.0 + w2 / params.k) -
           branch_sign(state.branch) * std::sqrt(-2.0 * state.p);
}

std::vector<HamiltonianSample> integrate_hamiltonian(const HamiltonianState& state,
                                                     const ModelParams& params,
                                                     double t_end, double dt) {
    params.validate();
    if (!(params.k > 0.0))
        throw std::invalid_argument("integrate_hamiltonian: requires k > 0");
    check_step(params, t_end, dt);
    if (!(state.p < 0.0))
        throw std::invalid_argument("integrate_hamiltonian: p must be < 0");

    const double sgn = branch_sign(state.branch);
    const double w2 = params.omega * params.omega;
    const auto guard = [](double p) {
        if (p > -1e-12)
            throw std::runtime_error("integrate_hamiltonian: p reached 0 (branch boundary)");
        if (-2.0 * p > 1e24)
            throw std::runtime_error("integrate_hamiltonian: |p| diverged (u -> 0, branch-switch locus)");
    };
    const auto xdot = [&](double x, double p) {
        return -(params.k * x * x / 3.0 + 3.0 * w2 / params.k) + sgn / std::sqrt(-2.0 * p);
    };
    const auto pdot = [&](double x, double p) { return (2.0 * params.k / 3.0) * p * x; };

    const int n_steps = static_cast<int>(std::llround(t_end / dt));
    std::vector<HamiltonianSample> traj;
    traj.reserve(n_steps + 1);
    double x = state.x, p = state.p;
    guard(p);
    traj.push_back({0.0, x, p, hamiltonian_value({x, p, state.branch}, params)});
    for (int i = 0; i < n_steps; ++i) {
        const double k1x = xdot(x, p), k1p = pdot(x, p);
        guard(p + 0.5 * dt * k1p);
        const double k2x = xdot(x + 0.5 * dt * k1x, p + 0.5 * dt * k1p);
        const double k2p = pdot(x + 0.5 * dt * k1x, p + 0.5 * dt * k1p);
        guard(p + 0.5 * dt * k2p);
        const double k3x = xdot(x + 0.5 * dt * k2x, p + 0.5 * dt * k2p);
        const double k3p = pdot(x + 0.5 * dt * k2x, p + 0.5 * dt * k2p);
        guard(p + dt * k3p);
        const double k4x = xdot(x + dt * k3x, p + dt * k3p);
        const double k4p = pdot(x + dt * k3x, p + dt * k3p);
        x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        p += dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        guard(p);
        traj.push_back({(i + 1) * dt, x, p, hamiltonian_value({x, p, state.branch}, params)});
    }
    return traj;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fb, double fm, double whole, double eps, int depth) {
    if (depth > 40)
        throw std::runtime_error("isochronous_g_value: inner integral did not converge");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (std::abs(left + right - whole) <= 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, fm, flm, left, 0.5 * eps, depth + 1) +
           adaptive_simpson(f, m, b, fm, fb, frm, right, 0.5 * eps, depth + 1);
}

}  // namespace

double isochronous_g_value(const std::function<double(double)>& f, double omega, double x) {
    if (x == 0.0) return 0.0;
    const auto integrand = [&](double t) { return t * f(t); };
    const double fa = integrand(0.0), fb = integrand(x), fm = integrand(0.5 * x);
    const double whole = x / 6.0 * (fa + 4.0 * fm + fb);
    const double eps = 1e-14 * std::max(1.0, std::abs(whole));
    const double integral = adaptive_simpson(integrand, 0.0, x, fa, fb, fm, whole, eps, 0);
    return omega * omega * x + integral * integral / (x * x * x);
}

std::string trajectory_to_csv(const std::vector<ClassicalState>& traj) {
    std::ostringstream os;
    os << "t,x,v\n";
    for (const auto& s : traj)
        os << detail::fmt_g12(s.t) << "," << detail::fmt_g12(s.x) << "," << detail::fmt_g12(s.v)
           << "\n";
    return os.str();
}

std::string trajectory_to_csv(const std::vector<HamiltonianSample>& traj) {
    std::ostringstream os;
    os << "t,x,p,H\n";
    for (const auto& s : traj)
        os << detail::fmt_g12(s.t) << "," << detail::fmt_g12(s.x) << "," << detail::fmt_g12(s.p)
           << "," << detail::fmt_g12(s.h) << "\n";
    return os.str();
}

}  // namespace emden
