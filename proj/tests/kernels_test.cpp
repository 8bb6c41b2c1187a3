#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "emden/eigensolver.hpp"
#include "emden/kernels.hpp"
#include "emden/model.hpp"

using namespace emden;

namespace {

struct BackendGuard {
    kernels::Backend saved = kernels::active_backend();
    ~BackendGuard() { kernels::set_backend(saved); }
};

std::vector<int> counts_with(kernels::Backend b, const std::vector<double>& diag,
                             const std::vector<double>& off_sq,
                             const std::vector<double>& shifts) {
    BackendGuard guard;
    REQUIRE(kernels::set_backend(b));
    std::vector<int> counts(shifts.size());
    kernels::sturm_counts(diag, off_sq, shifts, counts);
    return counts;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("free-Laplacian counts match the closed-form spectrum") {
    // eigenvalues of the Dirichlet stencil: (4/h^2) sin^2(j pi / (2(m+1)))
    const int m = 257;
    const double h = 0.05;
    std::vector<double> diag(m, 2.0 / (h * h));
    std::vector<double> off_sq(m - 1, 1.0 / (h * h * h * h));
    std::vector<double> eigs(m);
    for (int j = 1; j <= m; ++j) {
        const double s = std::sin(j * M_PI / (2.0 * (m + 1)));
        eigs[j - 1] = 4.0 / (h * h) * s * s;
    }
    std::vector<double> shifts = {eigs[0] - 1.0, 0.5 * (eigs[0] + eigs[1]),
                                  0.5 * (eigs[4] + eigs[5]), eigs[m - 1] + 1.0};
    std::vector<int> counts(shifts.size());
    kernels::sturm_counts(diag, off_sq, shifts, counts);
    CHECK(counts[0] == 0);
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 5);
    CHECK(counts[3] == m);
}

TEST_CASE("counts are monotone in the shift") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    std::vector<double> diag(101), off_sq(100);
    for (auto& v : diag) v = d(rng);
    for (auto& v : off_sq) {
        const double e = d(rng);
        v = e * e + 0.01;
    }
    // Gershgorin: |lambda| <= max|d| + 2 max|e| ~= 12
    std::vector<double> shifts;
    for (double s = -13.0; s <= 13.0; s += 0.25) shifts.push_back(s);
    std::vector<int> counts(shifts.size());
    kernels::sturm_counts(diag, off_sq, shifts, counts);
    for (std::size_t i = 1; i < counts.size(); ++i) CHECK(counts[i] >= counts[i - 1]);
    CHECK(counts.front() == 0);
    CHECK(counts.back() == 101);
}

TEST_CASE("scalar and AVX2 backends agree exactly on Sturm counts") {
    if (!kernels::set_backend(kernels::Backend::Avx2)) {
        BackendGuard guard;
        MESSAGE("AVX2 unavailable on this machine; skipping equivalence");
        return;
    }
    BackendGuard guard;

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (const int m : {1, 2, 3, 5, 17, 64, 501}) {
        std::vector<double> diag(m), off_sq(std::max(0, m - 1));
        for (auto& v : diag) v = d(rng);
        for (auto& v : off_sq) {
            const double e = d(rng);
            v = e * e;
        }
        std::vector<double> shifts(97);
        for (auto& s : shifts) s = d(rng) * 3.0;
        // include shifts that sit exactly on diagonal entries (pivot guard path)
        shifts[0] = diag[0];
        shifts[1] = diag[m / 2];
        const auto scalar = counts_with(kernels::Backend::Scalar, diag, off_sq, shifts);
        const auto avx2 = counts_with(kernels::Backend::Avx2, diag, off_sq, shifts);
        CHECK(scalar == avx2);
    }

    // a production matrix: the discretized half-line operator
    ModelParams p{10.0, 1.0, 0.5, Branch::Plus};
    Grid g = default_domain(p, 6);
    const Tridiagonal t = discretize(p, g);
    std::vector<double> off_sq(t.diag.size() - 1, t.off * t.off);
    std::vector<double> shifts;
    for (double lam = 0.0; lam < 40.0; lam += 0.37) shifts.push_back(lam);
    const auto scalar = counts_with(kernels::Backend::Scalar, t.diag, off_sq, shifts);
    const auto avx2 = counts_with(kernels::Backend::Avx2, t.diag, off_sq, shifts);
    CHECK(scalar == avx2);
}

TEST_CASE("dot backends agree to reduction-order round-off") {
    BackendGuard guard;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (const int m : {1, 7, 100, 4001}) {
        std::vector<double> a(m), b(m);
        double abs_sum = 0.0;
        for (int i = 0; i < m; ++i) {
            a[i] = d(rng);
            b[i] = d(rng);
            abs_sum += std::abs(a[i] * b[i]);
        }
        REQUIRE(kernels::set_backend(kernels::Backend::Scalar));
        const double s = kernels::dot(a, b);
        if (!kernels::set_backend(kernels::Backend::Avx2)) continue;
        const double v = kernels::dot(a, b);
        CHECK(std::abs(s - v) <= 1e-13 * std::max(1.0, abs_sum));
    }
}

TEST_CASE("argument validation") {
    std::vector<double> diag{1.0, 2.0}, off_sq{0.5}, shifts{0.0};
    std::vector<int> counts(1);
    std::vector<double> bad_off{0.5, 0.5};
    CHECK_THROWS_AS(kernels::sturm_counts(diag, bad_off, shifts, counts), std::invalid_argument);
    std::vector<int> bad_counts(2);
    CHECK_THROWS_AS(kernels::sturm_counts(diag, off_sq, shifts, bad_counts), std::invalid_argument);
    std::vector<double> a{1.0}, b{1.0, 2.0};
    CHECK_THROWS_AS(kernels::dot(a, b), std::invalid_argument);
}

}  // TEST_SUITE
