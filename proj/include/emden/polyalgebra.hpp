#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

// Exact rational polynomial arithmetic mechanizing the appendix algebra:
// the Chiellini identity g'f - g f' + l(l+1) f^3 = 0, the isochronous
// g-from-f construction, and the uniqueness scan over polynomial f.

namespace emden::poly {

using Rational = mpq_class;

class Polynomial {
public:
    Polynomial() = default;                           // zero polynomial
    explicit Polynomial(std::vector<Rational> coeffs);  // index = degree
    static Polynomial monomial(const Rational& c, int degree);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 is the sentinel for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;               // 0 beyond degree
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    Polynomial derivative() const;
    Polynomial scale(const Rational& s) const;
    /// Antiderivative with zero constant term.
    Polynomial integral() const;
    /// Quotient if `d` divides *this exactly, std::nullopt otherwise.
    std::optional<Polynomial> divide_exact(const Polynomial& d) const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;

    /// ASCII form "c0 + c1*x + c2*x^2 + ..." with rational coefficients "p/q".
    std::string to_string() const;
    /// Parses the same form (also bare "x", "-x^2", "3x"). Throws
    /// std::invalid_argument on malformed input.
    static Polynomial parse(const std::string& text);

private:
    void canonicalize();
    std::vector<Rational> c_;  // no trailing zeros
};

/// g(x) = w^2 x + I(x)^2 / x^3 with I(x) = integral_0^x x' f(x') dx'.
/// The division is exact for every polynomial f (I has valuation >= 2);
/// a remainder indicates an internal bug and throws std::logic_error.
Polynomial isochronous_g(const Polynomial& f, const Rational& omega_sq);

struct ChielliniReport {
    Polynomial f, g;
    Polynomial residual;                        // zero when compatible
    std::optional<Rational> chiellini_constant; // L = l(l+1) when compatible
    bool compatible = false;
};

/// Tests g'f - g f' + L f^3 = 0 for some rational constant L. When
/// incompatible, residual = r + L* f^3 for the coefficient-least-squares L*.
/// Throws std::invalid_argument for zero f.
ChielliniReport chiellini_check(const Polynomial& f, const Polynomial& g);

struct ScanEntry {
    Polynomial f;
    bool compatible = false;
    bool excluded_constant = false;  // degree-0 f: identity holds only for complex l
    std::optional<Rational> chiellini_constant;
};

struct ScanReport {
    std::vector<ScanEntry> entries;
    std::vector<ScanEntry> compatible_entries() const;
};

struct ScanOptions {
    Rational omega_sq = 100;
    // Deterministic coefficient sample set for the enumeration.
    std::vector<Rational> coeff_samples = {
        Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 2),
        Rational(1), Rational(2), Rational(3)};
};

/// Deterministic falsification harness over polynomial f up to max_degree
/// (<= 6): full low-degree enumeration over a small coefficient set plus
/// monomial/binomial families at higher degree. Expected compatible set:
/// exactly the multiples of x.
ScanReport uniqueness_scan(int max_degree, const ScanOptions& opts = {});

}  // namespace emden::poly
