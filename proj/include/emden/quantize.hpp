#pragma once

#include <string>
#include <vector>

#include "emden/model.hpp"

// Independent spectrum for eps = 1/4: roots in mu of the transcendental
// condition D_mu(-+ sqrt(w/4) xi0) = 0, mapped to E = w(mu + 1/2) - k/(6 w^2).

namespace emden {

struct QuantizationRoot {
    int n = 0;
    double mu = 0.0;
    double energy = 0.0;
    double mu_lo = 0.0, mu_hi = 0.0;  // final bracket
    double residual = 0.0;            // |D_mu| at the root
};

/// Scans mu in [0, 2*n_levels + 2] in steps of scan_step, brackets sign
/// changes, refines by bisection to |d mu| <= 1e-12. Requires eps = 1/4.
/// Throws std::invalid_argument for eps != 1/4, std::runtime_error when the
/// scan range is exhausted before n_levels roots are found.
std::vector<QuantizationRoot> quantize_pcf(const ModelParams& params, int n_levels,
                                           double scan_step = 0.25);

std::string quantization_to_json(const ModelParams& params,
                                 const std::vector<QuantizationRoot>& roots);

}  // namespace emden
