#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "emden/perturbation.hpp"
#include "emden/specfun.hpp"

using namespace emden;

TEST_SUITE("perturbation") {

TEST_CASE("n = 0 moment reduces to the single-term gamma ratio") {
    for (const double eps : {0.25, 0.5, 1.0}) {
        const double se = std::sqrt(eps);
        const double expect = std::sqrt(8.0 / 10.0) *
                              std::exp(specfun::log_gamma(se + 1.5) - specfun::log_gamma(se + 1.0));
        CHECK(first_moment_closed(0, eps, 10.0) == doctest::Approx(expect).epsilon(1e-13));
    }
    // frozen 40-digit values
    CHECK(first_moment_closed(0, 0.25, 10.0) == doctest::Approx(1.009253008808064).epsilon(1e-13));
    CHECK(first_moment_closed(0, 0.5, 10.0) == doctest::Approx(1.0871546957476645).epsilon(1e-13));
}

TEST_CASE("closed moments match frozen high-precision values") {
    const double eps025[] = {1.009253008808064, 1.513879513212096, 1.89234939151512,
                             2.20774095676764, 2.483708576363595, 2.7320794339999546};
    const double eps05[] = {1.0871546957476645, 1.5647850530262041, 1.9321430799431596,
                            2.2412846220738791, 2.5131621163636304, 2.7586068730117527};
    for (int n = 0; n < 6; ++n) {
        CHECK(first_moment_closed(n, 0.25, 10.0) == doctest::Approx(eps025[n]).epsilon(1e-12));
        CHECK(first_moment_closed(n, 0.5, 10.0) == doctest::Approx(eps05[n]).epsilon(1e-12));
    }
    CHECK(first_moment_closed(10, 0.25, 10.0) ==
          doctest::Approx(3.7343755023977243).epsilon(1e-12));
    CHECK(first_moment_closed(10, 0.5, 10.0) ==
          doctest::Approx(3.7532881352966238).epsilon(1e-12));
    CHECK(first_moment_closed(10, 1.0, 10.0) ==
          doctest::Approx(3.7801841252028612).epsilon(1e-12));
}

TEST_CASE("closed sum agrees with the quadrature oracle") {
    for (const double eps : {0.25, 0.5, 1.0}) {
        for (int n = 0; n <= 10; ++n) {
            const double closed = first_moment_closed(n, eps, 10.0);
            const double quad = first_moment_quadrature(n, eps, 10.0);
            CHECK(std::abs(closed - quad) / closed <= 1e-10);
        }
    }
}

TEST_CASE("moment scaling: doubling omega shrinks the moment by sqrt(2)") {
    const double m1 = first_moment_quadrature(0, 0.5, 10.0);
    const double m2 = first_moment_quadrature(0, 0.5, 20.0);
    CHECK(m1 / m2 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("moments grow monotonically with the level") {
    double prev = 0.0;
    for (int n = 0; n <= 10; ++n) {
        const double m = first_moment_closed(n, 0.5, 10.0);
        CHECK(m > prev);
        prev = m;
    }
}

TEST_CASE("large-n guard") {
    CHECK_NOTHROW(first_moment_closed(60, 0.5, 10.0));
    CHECK_THROWS_AS(first_moment_closed(61, 0.5, 10.0), std::invalid_argument);
}

TEST_CASE("smallness bound") {
    CHECK(smallness_bound(10.0, 0.5, 5) == doctest::Approx(525.66039414).epsilon(1e-9));
    double prev = smallness_bound(10.0, 0.5, 1);
    for (int n = 2; n <= 40; n *= 2) {
        const double b = smallness_bound(10.0, 0.5, n);
        CHECK(b < prev);
        prev = b;
    }
}

TEST_CASE("corrected energies: branch antisymmetry and validity") {
    ModelParams plus{10.0, 1.0, 0.5, Branch::Plus};
    ModelParams minus{10.0, 1.0, 0.5, Branch::Minus};
    const auto rp = corrected_energies(plus, 6);
    const auto rm = corrected_energies(minus, 6);
    REQUIRE(rp.size() == 6);
    for (int n = 0; n < 6; ++n) {
        CHECK(rp[n].delta == -rm[n].delta);           // exact by construction
        CHECK(rp[n].moment == rm[n].moment);
        CHECK(rp[n].moment > 0.0);
        CHECK(rp[n].delta < 0.0);                     // plus branch is pulled down
        CHECK(0.5 * (rp[n].e1 + rm[n].e1) ==
              doctest::Approx(rp[n].e0).epsilon(1e-14));
        CHECK(rp[n].valid);                           // k = 1 << bound/100
        CHECK(rp[n].e0 ==
              doctest::Approx(isotonic_exact_energy(n, 10.0, 0.5)).epsilon(1e-14));
    }
}

TEST_CASE("k = 0 leaves the spectrum untouched") {
    ModelParams p{10.0, 0.0, 0.5, Branch::Minus};
    for (const auto& r : corrected_energies(p, 4)) {
        CHECK(r.delta == 0.0);
        CHECK(r.e1 == r.e0);
    }
}

TEST_CASE("serialization formats") {
    ModelParams p{10.0, 1.0, 0.5, Branch::Plus};
    const auto results = corrected_energies(p, 2);
    const std::string j = perturbation_to_json(p, results);
    CHECK(j.find("\"method\":\"perturbation\"") != std::string::npos);
    CHECK(j.find("\"moment\":") != std::string::npos);
    CHECK(j.find("\"valid\":true") != std::string::npos);
    const std::string csv = perturbation_to_csv(results);
    CHECK(csv.rfind("n,e0,delta_plus,e1_plus,e1_minus\n", 0) == 0);
}

}  // TEST_SUITE
