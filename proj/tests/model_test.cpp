#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "emden/model.hpp"
#include "oracles.hpp"

using namespace emden;

TEST_SUITE("model") {

TEST_CASE("parameter invariants and warnings") {
    ModelParams p{10.0, 1.0, 0.25, Branch::Plus};
    CHECK_NOTHROW(p.validate());
    CHECK(p.xi0() == doctest::Approx(std::sqrt(1.0 / 6.0) * 0.04).epsilon(1e-15));

    CHECK_THROWS_AS((ModelParams{0.0, 1.0, 0.25, Branch::Plus}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ModelParams{10.0, -1.0, 0.25, Branch::Plus}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ModelParams{10.0, 1.0, -0.1, Branch::Plus}.validate()), std::invalid_argument);

    CHECK(ModelParams{10.0, 1.0, 0.1, Branch::Plus}.warnings().size() == 1);
    CHECK(ModelParams{10.0, 0.0, 0.25, Branch::Plus}.xi0() == 0.0);
    CHECK_FALSE(ModelParams{10.0, 0.0, 0.25, Branch::Minus}.warnings().empty());
}

TEST_CASE("params JSON round trip") {
    ModelParams p{10.0, 1.5, 0.5, Branch::Minus};
    const ModelParams q = ModelParams::from_json(p.to_json());
    CHECK(q.omega == p.omega);
    CHECK(q.k == p.k);
    CHECK(q.epsilon == p.epsilon);
    CHECK(q.branch == p.branch);
    CHECK_THROWS(ModelParams::from_json("{\"omega\":1}"));
}

TEST_CASE("effective potential examples") {
    // eps = 1/4, k = 0: pure quadratic
    ModelParams harm{10.0, 0.0, 0.25, Branch::Plus};
    for (double xi = 0.1; xi < 3.0; xi += 0.3)
        CHECK(effective_potential(harm, xi) ==
              doctest::Approx(100.0 * xi * xi / 64.0).epsilon(1e-14));

    // minimum of the plus branch sits at xi0 with depth -k/(24 w^2)
    ModelParams p{10.0, 1.0, 0.25, Branch::Plus};
    CHECK(effective_potential(p, p.xi0()) == doctest::Approx(-1.0 / 2400.0).epsilon(1e-12));

    // term-by-term oracle (frozen 40-digit value)
    ModelParams q{10.0, 1.0, 0.5, Branch::Plus};
    CHECK(effective_potential(q, 1.0) == doctest::Approx(1.7614689636920171).epsilon(1e-14));

    CHECK_THROWS_AS(effective_potential(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(effective_potential(p, -1.0), std::domain_error);
}

TEST_CASE("branch sign convention of the shifted center") {
    // plus branch at xi equals the minus-branch formula with xi0 negated
    ModelParams plus{10.0, 1.0, 0.5, Branch::Plus};
    ModelParams minus{10.0, 1.0, 0.5, Branch::Minus};
    const double x0 = plus.xi0();
    for (double xi = 0.05; xi < 4.0; xi += 0.21) {
        const double direct_plus = 100.0 * (xi - x0) * (xi - x0) / 64.0 + 0.25 / (xi * xi) -
                                   1.0 / 2400.0;
        const double direct_minus = 100.0 * (xi + x0) * (xi + x0) / 64.0 + 0.25 / (xi * xi) -
                                    1.0 / 2400.0;
        CHECK(effective_potential(plus, xi) == doctest::Approx(direct_plus).epsilon(1e-14));
        CHECK(effective_potential(minus, xi) == doctest::Approx(direct_minus).epsilon(1e-14));
    }
}

TEST_CASE("energy map round trips") {
    const EnergyMap map(10.0, 1.0);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(-100.0, 1000.0);
    for (int i = 0; i < 1000; ++i) {
        const double e = d(rng);
        CHECK(std::abs(map.energy_of_lambda(map.lambda_of_energy(e)) - e) <=
              1e-14 * std::max(1.0, std::abs(e)));
        CHECK(std::abs(map.energy_of_mu(map.mu_of_energy(e)) - e) <=
              1e-13 * std::max(1.0, std::abs(e)));
    }
    CHECK(map.lambda_of_energy(15.0) == doctest::Approx(15.0 / 4.0 + 1.0 / 2400.0).epsilon(1e-15));
    CHECK(map.mu_of_energy(15.0) == doctest::Approx(1.5 + 1.0 / 6000.0 - 0.5).epsilon(1e-15));
}

TEST_CASE("hermite truncation scan") {
    // k = 0 degenerate case: all odd levels, flagged
    ModelParams k0{10.0, 0.0, 0.25, Branch::Plus};
    const auto deg = hermite_truncation_scan(k0, 9);
    CHECK(deg.degenerate);
    CHECK(deg.levels == std::vector<int>{1, 3, 5, 7, 9});

    // k = 3 w^3 / 2 puts the argument exactly on the H_2 zero 1/sqrt(2)
    ModelParams special{10.0, 1500.0, 0.25, Branch::Plus};
    const auto hit = hermite_truncation_scan(special, 50);
    CHECK_FALSE(hit.degenerate);
    CHECK(hit.levels == std::vector<int>{2});

    // generic small-k parameters: no truncation up to n = 50
    ModelParams generic{10.0, 1.0, 0.25, Branch::Plus};
    const auto none = hermite_truncation_scan(generic, 50);
    CHECK(none.levels.empty());

    CHECK_THROWS_AS(hermite_truncation_scan(generic, 201), std::invalid_argument);
}

TEST_CASE("truncation scan finds at most one level for xi0 > 0") {
    for (double omega : {1.0, 3.0, 10.0}) {
        for (double k : {0.3, 1.0, 40.0, 1500.0}) {
            ModelParams p{omega, k, 0.25, Branch::Plus};
            CHECK(hermite_truncation_scan(p, 60).levels.size() <= 1);
        }
    }
}

TEST_CASE("isotonic exact energies") {
    CHECK(isotonic_exact_energy(0, 10.0, 0.25) == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(isotonic_exact_energy(2, 10.0, 0.25) == doctest::Approx(55.0).epsilon(1e-15));
    CHECK(isotonic_exact_energy(0, 10.0, 0.5) ==
          doctest::Approx(17.0710678118655).epsilon(1e-13));
}

TEST_CASE("isotonic eigenfunctions: boundary, norm, orthogonality") {
    CHECK(isotonic_eigenfunction(3, 10.0, 0.5, 0.0) == 0.0);
    for (int n = 0; n <= 5; ++n) {
        const double norm = oracles::simpson(
            [&](double xi) {
                const double f = isotonic_eigenfunction(n, 10.0, 0.5, xi);
                return f * f;
            },
            0.0, 8.0);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
    }
    const double overlap = oracles::simpson(
        [&](double xi) {
            return isotonic_eigenfunction(0, 10.0, 0.5, xi) *
                   isotonic_eigenfunction(1, 10.0, 0.5, xi);
        },
        0.0, 8.0, 1e-12, 1e-12);
    CHECK(std::abs(overlap) <= 1e-10);
}

TEST_CASE("isotonic eigenfunction node counts") {
    for (int n = 0; n <= 5; ++n) {
        int changes = 0;
        double prev = 0.0;
        for (double xi = 1e-3; xi < 8.0; xi += 1e-3) {
            const double f = isotonic_eigenfunction(n, 10.0, 0.5, xi);
            if (prev != 0.0 && f * prev < 0.0) ++changes;
            if (f != 0.0) prev = f;
        }
        CHECK(changes == n);
    }
}

}  // TEST_SUITE
