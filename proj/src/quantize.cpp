#include "emden/quantize.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "emden/detail/json_fmt.hpp"
#include "emden/specfun.hpp"

namespace emden {

std::vector<QuantizationRoot> quantize_pcf(const ModelParams& params, int n_levels,
                                           double scan_step) {
    params.validate();
    if (params.epsilon != 0.25)
        throw std::invalid_argument("quantize_pcf: requires epsilon = 1/4 exactly");
    if (n_levels < 1) throw std::invalid_argument("quantize_pcf: n_levels must be >= 1");
    if (!(scan_step > 0.0)) throw std::invalid_argument("quantize_pcf: scan_step must be > 0");

    // boundary condition D_mu(z) = 0 at z = -+ sqrt(w/4) xi0 (sign by branch)
    const double z = -branch_sign(params.branch) * std::sqrt(params.omega / 4.0) * params.xi0();
    const auto f = [&](double mu) { return specfun::parabolic_cylinder_d(mu, z); };
    const EnergyMap map(params);

    std::vector<QuantizationRoot> roots;
    const double mu_end = 2.0 * n_levels + 2.0;
    double mu = 0.0;
    double f_prev = f(mu);
    while (static_cast<int>(roots.size()) < n_levels && mu < mu_end) {
        const double mu_next = mu + scan_step;
        const double f_next = f(mu_next);
        if (f_prev == 0.0) {
            // scan landed on a root exactly; treat as a degenerate bracket
            QuantizationRoot r;
            r.n = static_cast<int>(roots.size());
            r.mu = mu;
            r.mu_lo = r.mu_hi = mu;
            r.residual = 0.0;
            r.energy = map.energy_of_mu(mu);
            roots.push_back(r);
        } else if (f_prev * f_next < 0.0) {
            // bisect to an ulp-tight bracket (well inside the 1e-12
            // contract); the residual |D_mu| scales with the mu-slope, which
            // grows along the spectrum
            double lo = mu, hi = mu_next;
            double f_lo = f_prev;
            for (int it = 0; it < 100 && hi - lo > 0.0; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi) break;
                const double f_mid = f(mid);
                if (f_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (f_lo * f_mid < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    f_lo = f_mid;
                }
            }
            QuantizationRoot r;
            r.n = static_cast<int>(roots.size());
            r.mu_lo = lo;
            r.mu_hi = hi;
            r.mu = 0.5 * (lo + hi);
            r.residual = std::abs(f(r.mu));
            r.energy = map.energy_of_mu(r.mu);
            roots.push_back(r);
        }
        mu = mu_next;
        f_prev = f_next;
    }
    if (static_cast<int>(roots.size()) < n_levels)
        throw std::runtime_error("quantize_pcf: scan range exhausted before finding " +
                                 std::to_string(n_levels) + " roots");
    return roots;
}

std::string quantization_to_json(const ModelParams& params,
                                 const std::vector<QuantizationRoot>& roots) {
    std::ostringstream os;
    os << "{\"params\":" << params.to_json() << ",\"method\":\"parabolic_cylinder\",\"roots\":[";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const auto& r = roots[i];
        os << (i ? "," : "") << "{\"n\":" << r.n << ",\"mu\":" << detail::fmt_g12(r.mu)
           << ",\"energy\":" << detail::fmt_g12(r.energy) << ",\"bracket\":["
           << detail::fmt_g12(r.mu_lo) << "," << detail::fmt_g12(r.mu_hi)
           << "],\"residual\":" << detail::fmt_g12(r.residual) << "}";
    }
    os << "]}";
    return os.str();
}

}  // namespace emden
