// Command-line front end: spectra, parabolic-cylinder quantization,
// perturbation tables, classical checks, polynomial Chiellini checks, and
// side-by-side reproduction of the reference eigenvalue tables.
//
// Exit codes: 0 success, 2 invalid flags or parse errors, 3 solver
// non-convergence, 4 reference-table deviation above tolerance.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "emden/classical.hpp"
#include "emden/detail/json_fmt.hpp"
#include "emden/eigensolver.hpp"
#include "emden/model.hpp"
#include "emden/perturbation.hpp"
#include "emden/polyalgebra.hpp"
#include "emden/quantize.hpp"
#include "emden/reference_tables.hpp"
#include "json.hpp"

namespace {

using emden::detail::fmt_g12;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitTableMismatch = 4;

struct TableMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON config file: values override built-in defaults, explicit flags
// override the config.
struct ConfigOverride {
    nlohmann::json j;

    static ConfigOverride load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("config file not readable: " + path);
        ConfigOverride c;
        in >> c.j;
        return c;
    }

    template <typename T>
    void apply(const CLI::App& cmd, const std::string& flag, const std::string& key, T& var) const {
        if (j.contains(key) && cmd.count(flag) == 0) var = j.at(key).get<T>();
    }
};

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

std::vector<emden::Branch> branches_from_flag(const std::string& flag) {
    if (flag == "both") return {emden::Branch::Plus, emden::Branch::Minus};
    return {emden::branch_from_string(flag)};
}

void print_param_warnings(const emden::ModelParams& p) {
    for (const auto& w : p.warnings()) std::cerr << "warning: " << w << "\n";
}

std::string spectra_to_json(const std::vector<emden::Spectrum>& spectra) {
    if (spectra.size() == 1) return spectra[0].to_json();
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < spectra.size(); ++i)
        os << (i ? "," : "") << "\"" << branch_name(spectra[i].params.branch)
           << "\":" << spectra[i].to_json();
    os << "}";
    return os.str();
}

std::string spectra_to_csv(const std::vector<emden::Spectrum>& spectra) {
    std::ostringstream os;
    os << "branch,n,energy,est_error\n";
    for (const auto& s : spectra) {
        for (std::size_t n = 0; n < s.energies.size(); ++n) {
            os << branch_name(s.params.branch) << "," << n << "," << fmt_g12(s.energies[n]) << ",";
            if (n < s.est_error.size()) os << fmt_g12(s.est_error[n]);
            os << "\n";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- spectrum
void add_cmd_spectrum(CLI::App& app) {
    auto* cmd = app.add_subcommand("spectrum",
                                   "Finite-difference spectrum of the branched half-line problem");
    auto omega = std::make_shared<double>(10.0);
    auto k = std::make_shared<double>(1.0);
    auto eps = std::make_shared<double>(0.25);
    auto branch = std::make_shared<std::string>("plus");
    auto levels = std::make_shared<int>(6);
    auto grid_n = std::make_shared<int>(4000);
    auto xi_max = std::make_shared<double>(0.0);
    auto richardson = std::make_shared<bool>(true);
    auto out = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("json");
    auto config = std::make_shared<std::string>();

    cmd->add_option("--omega", *omega, "angular frequency omega > 0 (natural units, hbar = 1)");
    cmd->add_option("--k", *k, "anharmonicity k >= 0 (natural units)");
    cmd->add_option("--eps", *eps, "ordering parameter eps = 4 alpha gamma >= 0 (dimensionless)");
    cmd->add_option("--branch", *branch, "branch: plus, minus or both")
        ->check(CLI::IsMember({"plus", "minus", "both"}));
    cmd->add_option("--levels", *levels, "number of levels (1..20)");
    cmd->add_option("--grid-n", *grid_n, "interior grid resolution (>= 500 points)");
    cmd->add_option("--xi-max", *xi_max, "domain size in xi (0 = automatic)");
    cmd->add_flag("--richardson,!--no-richardson", *richardson,
                  "Richardson-extrapolate between N and 2N grids (default on)");
    cmd->add_option("--out", *out, "output file (stdout table when omitted)");
    cmd->add_option("--format", *format, "output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--config", *config, "JSON config file with defaults (flags win)");

    cmd->callback([=]() {
        if (!config->empty()) {
            const auto cfg = ConfigOverride::load(*config);
            cfg.apply(*cmd, "--omega", "omega", *omega);
            cfg.apply(*cmd, "--k", "k", *k);
            cfg.apply(*cmd, "--eps", "epsilon", *eps);
            cfg.apply(*cmd, "--branch", "branch", *branch);
            cfg.apply(*cmd, "--levels", "levels", *levels);
            cfg.apply(*cmd, "--grid-n", "grid_n", *grid_n);
            cfg.apply(*cmd, "--xi-max", "xi_max", *xi_max);
            cfg.apply(*cmd, "--richardson", "richardson", *richardson);
        }
        std::vector<emden::Spectrum> spectra;
        for (const auto b : branches_from_flag(*branch)) {
            emden::ModelParams p{*omega, *k, *eps, b};
            p.validate();
            print_param_warnings(p);
            emden::Grid grid = emden::default_domain(p, *levels);
            grid.n_points = *grid_n;
            if (*xi_max > 0.0) grid.xi_max = *xi_max;
            spectra.push_back(emden::solve_levels(p, grid, *levels, *richardson));
        }
        if (out->empty() && *format == "json" && !cmd->count("--format")) {
            // human-readable table on stdout by default
            std::ostringstream os;
            os << "n";
            for (const auto& s : spectra) os << "  E_" << branch_name(s.params.branch);
            os << "\n";
            for (std::size_t n = 0; n < spectra[0].energies.size(); ++n) {
                os << n;
                for (const auto& s : spectra) os << "  " << fmt_g12(s.energies[n]);
                os << "\n";
            }
            emit("", os.str());
            return;
        }
        emit(*out, *format == "csv" ? spectra_to_csv(spectra) : spectra_to_json(spectra));
    });
}

// ---------------------------------------------------------------- quantize
void add_cmd_quantize(CLI::App& app) {
    auto* cmd = app.add_subcommand("quantize",
                                   "Parabolic-cylinder quantization (eps = 1/4 only)");
    auto omega = std::make_shared<double>(10.0);
    auto k = std::make_shared<double>(1.0);
    auto eps = std::make_shared<double>(0.25);
    auto branch = std::make_shared<std::string>("plus");
    auto levels = std::make_shared<int>(6);
    auto scan_step = std::make_shared<double>(0.25);
    auto out = std::make_shared<std::string>();
    auto config = std::make_shared<std::string>();

    cmd->add_option("--omega", *omega, "angular frequency omega > 0 (natural units)");
    cmd->add_option("--k", *k, "anharmonicity k >= 0 (natural units)");
    cmd->add_option("--eps", *eps, "must be 0.25 (the non-singular construction)");
    cmd->add_option("--branch", *branch, "branch: plus, minus or both")
        ->check(CLI::IsMember({"plus", "minus", "both"}));
    cmd->add_option("--levels", *levels, "number of roots to locate");
    cmd->add_option("--scan-step", *scan_step, "bracketing step in mu (dimensionless)");
    cmd->add_option("--out", *out, "output file (stdout when omitted)");
    cmd->add_option("--config", *config, "JSON config file with defaults (flags win)");

    cmd->callback([=]() {
        if (!config->empty()) {
            const auto cfg = ConfigOverride::load(*config);
            cfg.apply(*cmd, "--omega", "omega", *omega);
            cfg.apply(*cmd, "--k", "k", *k);
            cfg.apply(*cmd, "--eps", "epsilon", *eps);
            cfg.apply(*cmd, "--branch", "branch", *branch);
            cfg.apply(*cmd, "--levels", "levels", *levels);
        }
        std::ostringstream os;
        bool first = true;
        const auto branches = branches_from_flag(*branch);
        if (branches.size() > 1) os << "{";
        for (const auto b : branches) {
            emden::ModelParams p{*omega, *k, *eps, b};
            p.validate();
            const auto roots = emden::quantize_pcf(p, *levels, *scan_step);
            if (branches.size() > 1)
                os << (first ? "" : ",") << "\"" << branch_name(b)
                   << "\":" << quantization_to_json(p, roots);
            else
                os << quantization_to_json(p, roots);
            first = false;
        }
        if (branches.size() > 1) os << "}";
        emit(*out, os.str());
    });
}

// ----------------------------------------------------------------- perturb
void add_cmd_perturb(CLI::App& app) {
    auto* cmd = app.add_subcommand("perturb",
                                   "First-order corrected energies on the isotonic basis");
    auto omega = std::make_shared<double>(10.0);
    auto k = std::make_shared<double>(1.0);
    auto eps = std::make_shared<double>(0.5);
    auto branch = std::make_shared<std::string>("both");
    auto levels = std::make_shared<int>(6);
    auto out = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("json");
    auto config = std::make_shared<std::string>();

    cmd->add_option("--omega", *omega, "angular frequency omega > 0 (natural units)");
    cmd->add_option("--k", *k, "anharmonicity k >= 0 (natural units)");
    cmd->add_option("--eps", *eps, "ordering parameter eps >= 0 (dimensionless)");
    cmd->add_option("--branch", *branch, "branch: plus, minus or both")
        ->check(CLI::IsMember({"plus", "minus", "both"}));
    cmd->add_option("--levels", *levels, "number of levels");
    cmd->add_option("--out", *out, "output file (stdout when omitted)");
    cmd->add_option("--format", *format, "output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--config", *config, "JSON config file with defaults (flags win)");

    cmd->callback([=]() {
        if (!config->empty()) {
            const auto cfg = ConfigOverride::load(*config);
            cfg.apply(*cmd, "--omega", "omega", *omega);
            cfg.apply(*cmd, "--k", "k", *k);
            cfg.apply(*cmd, "--eps", "epsilon", *eps);
            cfg.apply(*cmd, "--branch", "branch", *branch);
            cfg.apply(*cmd, "--levels", "levels", *levels);
        }
        if (*format == "csv") {
            emden::ModelParams p{*omega, *k, *eps, emden::Branch::Plus};
            p.validate();
            emit(*out, emden::perturbation_to_csv(emden::corrected_energies(p, *levels)));
            return;
        }
        const auto branches = branches_from_flag(*branch);
        std::ostringstream os;
        bool first = true;
        if (branches.size() > 1) os << "{";
        for (const auto b : branches) {
            emden::ModelParams p{*omega, *k, *eps, b};
            p.validate();
            const auto results = emden::corrected_energies(p, *levels);
            if (branches.size() > 1)
                os << (first ? "" : ",") << "\"" << branch_name(b)
                   << "\":" << perturbation_to_json(p, results);
            else
                os << perturbation_to_json(p, results);
            first = false;
        }
        if (branches.size() > 1) os << "}";
        emit(*out, os.str());
    });
}

// --------------------------------------------------------------- classical
void add_cmd_classical(CLI::App& app) {
    auto* cmd = app.add_subcommand("classical",
                                   "Classical checks: periods across amplitudes, trajectory export");
    auto omega = std::make_shared<double>(10.0);
    auto k = std::make_shared<double>(1.0);
    auto amplitudes = std::make_shared<std::string>("0.1,1,5");
    auto trajectory = std::make_shared<std::string>();
    auto x0 = std::make_shared<double>(1.0);
    auto v0 = std::make_shared<double>(0.0);
    auto t_end = std::make_shared<double>(0.0);
    auto dt = std::make_shared<double>(0.0);
    auto out = std::make_shared<std::string>();
    auto config = std::make_shared<std::string>();

    cmd->add_option("--omega", *omega, "angular frequency omega > 0 (natural units)");
    cmd->add_option("--k", *k, "anharmonicity k >= 0 (natural units)");
    cmd->add_option("--amplitudes", *amplitudes,
                    "comma list of initial amplitudes x0 (v0 = 0) for the period report");
    cmd->add_option("--trajectory", *trajectory, "export a trajectory instead: emden | hamiltonian")
        ->check(CLI::IsMember({"emden", "hamiltonian"}));
    cmd->add_option("--x0", *x0, "initial position (trajectory mode)");
    cmd->add_option("--v0", *v0, "initial velocity (trajectory mode)");
    cmd->add_option("--t-end", *t_end, "integration time, default 3 periods (time units)");
    cmd->add_option("--dt", *dt, "time step, default (2 pi/omega)/2000 (time units)");
    cmd->add_option("--out", *out, "output file (stdout when omitted)");
    cmd->add_option("--config", *config, "JSON config file with defaults (flags win)");

    cmd->callback([=]() {
        if (!config->empty()) {
            const auto cfg = ConfigOverride::load(*config);
            cfg.apply(*cmd, "--omega", "omega", *omega);
            cfg.apply(*cmd, "--k", "k", *k);
            cfg.apply(*cmd, "--amplitudes", "amplitudes", *amplitudes);
        }
        emden::ModelParams p{*omega, *k, 0.25, emden::Branch::Plus};
        p.validate();
        const double period_lin = 2.0 * M_PI / *omega;
        const double step = *dt > 0.0 ? *dt : period_lin / 2000.0;
        const double horizon = *t_end > 0.0 ? *t_end : 3.0 * period_lin;

        if (!trajectory->empty()) {
            if (*trajectory == "emden") {
                emit(*out, trajectory_to_csv(emden::integrate_emden(*x0, *v0, p, horizon, step)));
            } else {
                const auto h0 = emden::emden_to_canonical({*x0, *v0, 0.0}, p);
                emit(*out, trajectory_to_csv(emden::integrate_hamiltonian(h0, p, horizon, step)));
            }
            return;
        }

        std::ostringstream os;
        os << "{\"omega\":" << fmt_g12(*omega) << ",\"k\":" << fmt_g12(*k)
           << ",\"expected_period\":" << fmt_g12(period_lin) << ",\"periods\":[";
        std::stringstream amps(*amplitudes);
        std::string tok;
        bool first = true;
        while (std::getline(amps, tok, ',')) {
            const double a = std::stod(tok);
            const auto traj = emden::integrate_emden(a, 0.0, p, horizon, step);
            const double period = emden::detect_period(traj, p);
            os << (first ? "" : ",") << "{\"amplitude\":" << fmt_g12(a)
               << ",\"period\":" << fmt_g12(period) << "}";
            first = false;
        }
        os << "]}";
        emit(*out, os.str());
    });
}

// --------------------------------------------------------------- polycheck
void add_cmd_polycheck(CLI::App& app) {
    auto* cmd = app.add_subcommand("polycheck",
                                   "Chiellini compatibility of a polynomial f against the "
                                   "isochronous g built from it");
    auto f_text = std::make_shared<std::string>();
    auto g_text = std::make_shared<std::string>();
    auto omega_sq = std::make_shared<std::string>("1");

    cmd->add_option("poly", *f_text, "polynomial f, e.g. \"x\" or \"1/2*x^2 + 3*x\"")->required();
    cmd->add_option("--g", *g_text, "explicit g (default: isochronous g from f)");
    cmd->add_option("--omega-sq", *omega_sq, "omega^2 as an exact rational, e.g. 100 or 981/100");

    cmd->callback([=]() {
        const auto f = emden::poly::Polynomial::parse(*f_text);
        emden::poly::Rational w2(*omega_sq);
        w2.canonicalize();
        const auto g = g_text->empty() ? emden::poly::isochronous_g(f, w2)
                                       : emden::poly::Polynomial::parse(*g_text);
        const auto rep = emden::poly::chiellini_check(f, g);
        std::cout << "f = " << f.to_string() << "\n";
        std::cout << "g = " << g.to_string() << "\n";
        if (rep.compatible) {
            std::cout << "compatible, L = " << rep.chiellini_constant->get_str() << "\n";
        } else {
            std::cout << "incompatible, residual = " << rep.residual.to_string() << "\n";
        }
    });
}

// ----------------------------------------------------------- eigenfunction
void add_cmd_eigenfunction(CLI::App& app) {
    auto* cmd = app.add_subcommand("eigenfunction",
                                   "Grid samples of a normalized bound state (CSV for plotting)");
    auto omega = std::make_shared<double>(10.0);
    auto k = std::make_shared<double>(1.0);
    auto eps = std::make_shared<double>(0.5);
    auto branch = std::make_shared<std::string>("plus");
    auto level = std::make_shared<int>(0);
    auto grid_n = std::make_shared<int>(4000);
    auto xi_max = std::make_shared<double>(0.0);
    auto out = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("csv");
    auto config = std::make_shared<std::string>();

    cmd->add_option("--omega", *omega, "angular frequency omega > 0 (natural units)");
    cmd->add_option("--k", *k, "anharmonicity k >= 0 (natural units)");
    cmd->add_option("--eps", *eps, "ordering parameter eps >= 0 (dimensionless)");
    cmd->add_option("--branch", *branch, "branch: plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    cmd->add_option("--n", *level, "level index n >= 0");
    cmd->add_option("--grid-n", *grid_n, "interior grid resolution (>= 500 points)");
    cmd->add_option("--xi-max", *xi_max, "domain size in xi (0 = automatic)");
    cmd->add_option("--out", *out, "output file (stdout when omitted)");
    cmd->add_option("--format", *format, "output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--config", *config, "JSON config file with defaults (flags win)");

    cmd->callback([=]() {
        if (!config->empty()) {
            const auto cfg = ConfigOverride::load(*config);
            cfg.apply(*cmd, "--omega", "omega", *omega);
            cfg.apply(*cmd, "--k", "k", *k);
            cfg.apply(*cmd, "--eps", "epsilon", *eps);
            cfg.apply(*cmd, "--branch", "branch", *branch);
            cfg.apply(*cmd, "--n", "n", *level);
        }
        emden::ModelParams p{*omega, *k, *eps, emden::branch_from_string(*branch)};
        p.validate();
        print_param_warnings(p);
        emden::Grid grid = emden::default_domain(p, *level + 1);
        grid.n_points = *grid_n;
        if (*xi_max > 0.0) grid.xi_max = *xi_max;
        const auto table = emden::eigenfunction(p, grid, *level);
        emit(*out, *format == "csv" ? table.to_csv() : table.to_json());
    });
}

// ------------------------------------------------------------------- table
void add_cmd_table(CLI::App& app) {
    auto* cmd = app.add_subcommand("table",
                                   "Reproduce a reference eigenvalue table and report deviations");
    auto which = std::make_shared<int>(1);
    cmd->add_option("id", *which, "table id: 1 (FD, eps=1/4), 2 (FD, eps=1/2), 3 (perturbation)")
        ->required()
        ->check(CLI::Range(1, 3));

    cmd->callback([=]() {
        const auto& ref = emden::reference::table(*which);
        std::vector<double> plus, minus;
        if (*which == 3) {
            emden::ModelParams p{ref.omega, ref.k, ref.epsilon, emden::Branch::Plus};
            for (const auto& r : emden::corrected_energies(p, 6)) plus.push_back(r.e1);
            p.branch = emden::Branch::Minus;
            for (const auto& r : emden::corrected_energies(p, 6)) minus.push_back(r.e1);
        } else {
            for (const auto b : {emden::Branch::Plus, emden::Branch::Minus}) {
                emden::ModelParams p{ref.omega, ref.k, ref.epsilon, b};
                const auto solved = emden::solve_levels(p, emden::default_domain(p, 6), 6, true);
                (b == emden::Branch::Plus ? plus : minus) = solved.energies;
            }
        }
        double max_dev = 0.0;
        std::printf("table %d (omega=%g, k=%g, eps=%g)\n", ref.id, ref.omega, ref.k, ref.epsilon);
        std::printf("%2s  %14s %14s %10s   %14s %14s %10s\n", "n", "E+_computed", "E+_reference",
                    "dev+", "E-_computed", "E-_reference", "dev-");
        for (int n = 0; n < 6; ++n) {
            const double dp = std::abs(plus[n] - ref.plus[n]);
            const double dm = std::abs(minus[n] - ref.minus[n]);
            max_dev = std::max({max_dev, dp, dm});
            std::printf("%2d  %14.8f %14.8f %10.2e   %14.8f %14.8f %10.2e\n", n, plus[n],
                        ref.plus[n], dp, minus[n], ref.minus[n], dm);
        }
        std::printf("max |deviation| = %.3e (tolerance %.1e)\n", max_dev, ref.tolerance);
        if (max_dev > ref.tolerance)
            throw TableMismatch("table " + std::to_string(ref.id) +
                                " deviation exceeds tolerance");
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-harmonic spectra of the branched Hamiltonians of the modified Emden "
                 "equation"};
    app.require_subcommand(1);

    add_cmd_spectrum(app);
    add_cmd_quantize(app);
    add_cmd_perturb(app);
    add_cmd_classical(app);
    add_cmd_polycheck(app);
    add_cmd_eigenfunction(app);
    add_cmd_table(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const TableMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTableMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
    return kExitOk;
}
