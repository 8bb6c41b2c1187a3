#include "emden/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "emden/detail/json_fmt.hpp"
#include "emden/specfun.hpp"
#include "json.hpp"

namespace emden {

const char* branch_name(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

Branch branch_from_string(const std::string& s) {
    if (s == "plus") return Branch::Plus;
    if (s == "minus") return Branch::Minus;
    throw std::invalid_argument("branch must be \"plus\" or \"minus\", got \"" + s + "\"");
}

double ModelParams::xi0() const { return std::sqrt(k / 6.0) * 4.0 / (omega * omega); }

void ModelParams::validate() const {
    if (!(omega > 0.0)) throw std::invalid_argument("ModelParams: omega must be > 0");
    if (!(k >= 0.0)) throw std::invalid_argument("ModelParams: k must be >= 0");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("ModelParams: epsilon must be >= 0");
}

std::vector<std::string> ModelParams::warnings() const {
    std::vector<std::string> w;
    if (epsilon < 0.25)
        w.push_back("epsilon < 1/4: the inverse-square term is attractive; "
                    "solver defaults assume epsilon >= 1/4");
    if (k == 0.0)
        w.push_back("k = 0: xi0 = 0, the branch setting is irrelevant");
    return w;
}

std::string ModelParams::to_json() const {
    std::ostringstream os;
    os << "{\"omega\":" << detail::fmt_g12(omega) << ",\"k\":" << detail::fmt_g12(k)
       << ",\"epsilon\":" << detail::fmt_g12(epsilon) << ",\"branch\":\"" << branch_name(branch)
       << "\"}";
    return os.str();
}

ModelParams ModelParams::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ModelParams p;
    p.omega = j.at("omega").get<double>();
    p.k = j.at("k").get<double>();
    p.epsilon = j.at("epsilon").get<double>();
    p.branch = branch_from_string(j.at("branch").get<std::string>());
    p.validate();
    return p;
}

double effective_potential(const ModelParams& params, double xi) {
    if (!(xi > 0.0)) throw std::domain_error("effective_potential: xi must be > 0");
    const double w2 = params.omega * params.omega;
    const double center = xi - branch_sign(params.branch) * params.xi0();
    return w2 * center * center / 64.0 + (params.epsilon - 0.25) / (xi * xi) -
           params.k / (24.0 * w2);
}

TruncationScan hermite_truncation_scan(const ModelParams& params, int n_max) {
    params.validate();
    if (n_max < 0 || n_max > 200)
        throw std::invalid_argument("hermite_truncation_scan: n_max must be in [0, 200]");
    TruncationScan scan;
    const double arg = std::sqrt(params.omega * params.xi0() * params.xi0() / 8.0);
    if (arg == 0.0) {
        // k = 0 degenerate case: every odd-order polynomial vanishes at 0
        scan.degenerate = true;
        for (int n = 1; n <= n_max; n += 2) scan.levels.push_back(n);
        return scan;
    }
    for (int n = 0; n <= n_max; ++n) {
        const double value = specfun::hermite(n, arg);
        const double scale = specfun::hermite_recurrence_scale(n, arg);
        if (std::abs(value) <= 1e-9 * scale) scan.levels.push_back(n);
    }
    return scan;
}

double isotonic_exact_energy(int n, double omega, double epsilon) {
    if (n < 0) throw std::invalid_argument("isotonic_exact_energy: n must be >= 0");
    return omega * (2.0 * n + std::sqrt(epsilon) + 1.0);
}

double isotonic_eigenfunction(int n, double omega, double epsilon, double xi) {
    if (n < 0) throw std::invalid_argument("isotonic_eigenfunction: n must be >= 0");
    if (!(xi >= 0.0)) throw std::domain_error("isotonic_eigenfunction: xi must be >= 0");
    if (xi == 0.0) return 0.0;
    const double se = std::sqrt(epsilon);
    // N_n = sqrt(2 (w/8)^(se+1) n! / Gamma(n+se+1)), assembled in logs
    const double log_norm = 0.5 * (std::log(2.0) + (se + 1.0) * std::log(omega / 8.0) +
                                   specfun::log_gamma(n + 1.0) - specfun::log_gamma(n + se + 1.0));
    const double t = omega * xi * xi / 8.0;
    return std::exp(log_norm + (0.5 + se) * std::log(xi) - omega * xi * xi / 16.0) *
           specfun::laguerre_assoc(n, se, t);
}

}  // namespace emden
