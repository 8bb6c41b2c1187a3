#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "emden/quantize.hpp"
#include "emden/specfun.hpp"

using namespace emden;

namespace {

// independent bracketing root finder on mu -> D_mu(z), used to verify the
// sign structure of the quantization condition
std::vector<double> scan_roots(double z, int count) {
    std::vector<double> roots;
    double mu = 0.0, prev = specfun::parabolic_cylinder_d(0.0, z);
    while (static_cast<int>(roots.size()) < count && mu < 2.0 * count + 2.0) {
        const double next = specfun::parabolic_cylinder_d(mu + 0.125, z);
        if (prev * next < 0.0) {
            double lo = mu, hi = mu + 0.125;
            for (int i = 0; i < 60; ++i) {
                const double mid = 0.5 * (lo + hi);
                if (specfun::parabolic_cylinder_d(mid, z) *
                        specfun::parabolic_cylinder_d(lo, z) <= 0.0)
                    hi = mid;
                else
                    lo = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev = next;
        mu += 0.125;
    }
    return roots;
}

}  // namespace

TEST_SUITE("quantize") {

TEST_CASE("k = 0 reduces to the odd half-line oscillator levels") {
    ModelParams p{10.0, 0.0, 0.25, Branch::Plus};
    const auto roots = quantize_pcf(p, 5);
    REQUIRE(roots.size() == 5);
    for (int n = 0; n < 5; ++n) {
        CHECK(roots[n].mu == doctest::Approx(2.0 * n + 1.0).epsilon(1e-10));
        CHECK(roots[n].energy == doctest::Approx(10.0 * (2.0 * n + 1.5)).epsilon(1e-10));
    }
}

TEST_CASE("omega = 10, k = 1 roots match the frozen 40-digit values") {
    // cross-validated against the finite-difference route in the acceptance
    // suite; the frozen values here pin the mu-map and the root refinement
    ModelParams plus{10.0, 1.0, 0.25, Branch::Plus};
    const auto rp = quantize_pcf(plus, 6);
    CHECK(rp[0].mu == doctest::Approx(0.97952880639409).epsilon(1e-9));
    const double expect_plus[6] = {14.7936213973, 34.6906520077, 54.6134043159,
                                   74.5490277492, 94.4926972235, 114.441999344};
    for (int n = 0; n < 6; ++n)
        CHECK(rp[n].energy == doctest::Approx(expect_plus[n]).epsilon(1e-8));

    ModelParams minus{10.0, 1.0, 0.25, Branch::Minus};
    const auto rm = quantize_pcf(minus, 6);
    CHECK(rm[0].mu == doctest::Approx(1.02073165729166).epsilon(1e-9));
    const double expect_minus[6] = {15.2056499062, 35.3086920152, 55.3859536449,
                                    75.4503349811, 95.5066676664, 115.557366698};
    for (int n = 0; n < 6; ++n)
        CHECK(rm[n].energy == doctest::Approx(expect_minus[n]).epsilon(1e-8));
}

TEST_CASE("root invariants: residuals, ordering, brackets, interlacing") {
    ModelParams p{10.0, 1.0, 0.25, Branch::Minus};
    const auto roots = quantize_pcf(p, 6);
    for (std::size_t n = 0; n < roots.size(); ++n) {
        const auto& r = roots[n];
        CHECK(r.residual <= 1e-10);
        CHECK(r.mu_hi - r.mu_lo <= 1.1e-12);
        CHECK(r.mu >= r.mu_lo);
        CHECK(r.mu <= r.mu_hi);
        // small-xi0 interlacing around the odd integers
        CHECK(r.mu > 2.0 * n);
        CHECK(r.mu < 2.0 * n + 2.0);
        if (n > 0) CHECK(r.mu > roots[n - 1].mu);
    }
}

TEST_CASE("sign structure: branch argument is -+ sqrt(w/4) xi0") {
    ModelParams plus{10.0, 1.0, 0.25, Branch::Plus};
    ModelParams minus{10.0, 1.0, 0.25, Branch::Minus};
    const double a = std::sqrt(10.0 / 4.0) * plus.xi0();
    const auto plus_ref = scan_roots(-a, 4);
    const auto minus_ref = scan_roots(+a, 4);
    const auto rp = quantize_pcf(plus, 4);
    const auto rm = quantize_pcf(minus, 4);
    for (int n = 0; n < 4; ++n) {
        CHECK(rp[n].mu == doctest::Approx(plus_ref[n]).epsilon(1e-9));
        CHECK(rm[n].mu == doctest::Approx(minus_ref[n]).epsilon(1e-9));
    }
}

TEST_CASE("rejects eps != 1/4 and exhausted scans") {
    ModelParams bad{10.0, 1.0, 0.5, Branch::Plus};
    CHECK_THROWS_AS(quantize_pcf(bad, 3), std::invalid_argument);

    // a single scan panel spanning the whole range sees an even number of
    // crossings at its endpoints and finds too few roots
    ModelParams p{10.0, 0.0, 0.25, Branch::Plus};
    CHECK_THROWS_AS(quantize_pcf(p, 8, 18.0), std::runtime_error);
}

TEST_CASE("JSON output shape") {
    ModelParams p{10.0, 1.0, 0.25, Branch::Plus};
    const auto roots = quantize_pcf(p, 2);
    const std::string j = quantization_to_json(p, roots);
    CHECK(j.find("\"method\":\"parabolic_cylinder\"") != std::string::npos);
    CHECK(j.find("\"mu\":") != std::string::npos);
    CHECK(j.find("\"bracket\":[") != std::string::npos);
}

}  // TEST_SUITE
