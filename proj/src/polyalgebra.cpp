#include "emden/polyalgebra.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace emden::poly {

namespace {
const Rational kZero{0};
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { canonicalize(); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("Polynomial::monomial: negative degree");
    std::vector<Rational> v(degree + 1, kZero);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::canonicalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, kZero);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> v(c_.size() - 1, kZero);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scale(const Rational& s) const {
    std::vector<Rational> v(c_);
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::integral() const {
    if (is_zero()) return Polynomial();
    std::vector<Rational> v(c_.size() + 1, kZero);
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return Polynomial(std::move(v));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw std::invalid_argument("Polynomial::divide_exact: division by zero");
    if (is_zero()) return Polynomial();
    if (degree() < d.degree()) return std::nullopt;
    std::vector<Rational> rem(c_);
    std::vector<Rational> quot(degree() - d.degree() + 1, kZero);
    for (int i = degree() - d.degree(); i >= 0; --i) {
        const Rational q = rem[i + d.degree()] / d.c_.back();
        quot[i] = q;
        for (int j = 0; j <= d.degree(); ++j) rem[i + j] -= q * d.c_[j];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return Polynomial(std::move(quot));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i == 1)
            os << "*x";
        else if (i > 1)
            os << "*x^" << i;
        first = false;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("Polynomial::parse: " + what + " at position " +
                                    std::to_string(pos) + " in \"" + s + "\"");
    }

    std::string digits() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return s.substr(start, pos - start);
    }

    // "p" or "p/q"
    Rational number() {
        std::string num = digits();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            num += "/" + digits();
        }
        Rational r(num);
        if (r.get_den() == 0) fail("zero denominator");  // before canonicalize (GMP divides)
        r.canonicalize();
        return r;
    }

    // term := [number] ['*'] ['x' ['^' digits]]
    void term(std::vector<Rational>& coeffs, int sign) {
        skip_ws();
        Rational coeff = 1;
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = number();
            have_coeff = true;
        }
        int power = 0;
        skip_ws();
        bool star = eat('*');
        skip_ws();
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            power = 1;
            if (eat('^')) {
                skip_ws();
                power = std::stoi(digits());
            }
        } else {
            if (star) fail("'*' not followed by x");
            if (!have_coeff) fail("expected a term");
        }
        if (power > 64) fail("exponent too large");
        if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, kZero);
        coeffs[power] += sign < 0 ? Rational(-coeff) : coeff;
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
    Parser p(text);
    std::vector<Rational> coeffs;
    p.skip_ws();
    if (p.pos == p.s.size()) p.fail("empty input");
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.pos == p.s.size()) break;
        int sign = 1;
        if (!first) {
            if (p.eat('+'))
                sign = 1;
            else if (p.eat('-'))
                sign = -1;
            else
                p.fail("expected '+' or '-' between terms");
        }
        // unary sign directly on the term
        while (true) {
            if (p.eat('-'))
                sign = -sign;
            else if (p.eat('+'))
                ;
            else
                break;
        }
        p.term(coeffs, sign);
        first = false;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial isochronous_g(const Polynomial& f, const Rational& omega_sq) {
    if (omega_sq <= 0) throw std::invalid_argument("isochronous_g: omega_sq must be > 0");
    // I(x) = integral of x*f(x); valuation(I) >= 2, so I^2 is divisible by x^3
    const Polynomial xf = Polynomial::monomial(1, 1) * f;
    const Polynomial I = xf.integral();
    const Polynomial I2 = I * I;
    const auto quotient = I2.divide_exact(Polynomial::monomial(1, 3));
    if (!quotient && !I2.is_zero())
        throw std::logic_error("isochronous_g: x^3 does not divide I^2 (internal bug)");
    Polynomial g = Polynomial::monomial(omega_sq, 1);
    if (quotient) g = g + *quotient;
    return g;
}

ChielliniReport chiellini_check(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) throw std::invalid_argument("chiellini_check: f must be nonzero");
    ChielliniReport rep;
    rep.f = f;
    rep.g = g;
    const Polynomial r = g.derivative() * f - g * f.derivative();
    const Polynomial f3 = f * f * f;
    if (r.is_zero()) {
        rep.compatible = true;
        rep.chiellini_constant = Rational(0);
        return rep;
    }
    if (auto q = r.divide_exact(f3); q && q->degree() == 0) {
        rep.compatible = true;
        rep.chiellini_constant = Rational(-q->coeff(0));
        return rep;
    }
    // incompatible: report the coefficient-least-squares residual r + L* f^3
    Rational num = 0, den = 0;
    const int top = std::max(r.degree(), f3.degree());
    for (int i = 0; i <= top; ++i) {
        num += r.coeff(i) * f3.coeff(i);
        den += f3.coeff(i) * f3.coeff(i);
    }
    const Rational l_star = -num / den;
    rep.residual = r + f3.scale(l_star);
    rep.compatible = false;
    return rep;
}

std::vector<ScanEntry> ScanReport::compatible_entries() const {
    std::vector<ScanEntry> out;
    for (const auto& e : entries)
        if (e.compatible) out.push_back(e);
    return out;
}

namespace {

ScanEntry scan_one(const Polynomial& f, const Rational& omega_sq) {
    ScanEntry e;
    e.f = f;
    const auto rep = chiellini_check(f, isochronous_g(f, omega_sq));
    if (f.degree() == 0) {
        // constant f satisfies the identity only with l(l+1) < -1/4, i.e.
        // complex l; flagged and not counted compatible
        e.excluded_constant = true;
        e.compatible = false;
        e.chiellini_constant = rep.chiellini_constant;
        return e;
    }
    e.compatible = rep.compatible;
    e.chiellini_constant = rep.chiellini_constant;
    return e;
}

}  // namespace

ScanReport uniqueness_scan(int max_degree, const ScanOptions& opts) {
    if (max_degree < 1 || max_degree > 6)
        throw std::invalid_argument("uniqueness_scan: max_degree must be in [1, 6]");
    ScanReport report;

    // affine grid from the appendix argument: f = k x + b
    for (long k = 1; k <= 3; ++k) {
        for (long b = -1; b <= 1; ++b) {
            Polynomial f(std::vector<Rational>{Rational(b), Rational(k)});
            report.entries.push_back(scan_one(f, opts.omega_sq));
        }
    }

    // constants, flagged separately
    for (const auto& c : opts.coeff_samples)
        report.entries.push_back(scan_one(Polynomial(std::vector<Rational>{c}), opts.omega_sq));

    // full enumeration up to degree 3 over the sample set (plus zero for
    // non-leading coefficients)
    std::vector<Rational> with_zero = opts.coeff_samples;
    with_zero.push_back(0);
    const int full_deg = std::min(max_degree, 3);
    for (int d = 1; d <= full_deg; ++d) {
        std::vector<std::size_t> idx(d, 0);  // non-leading coefficient indices
        while (true) {
            for (const auto& lead : opts.coeff_samples) {
                std::vector<Rational> c(d + 1);
                for (int i = 0; i < d; ++i) c[i] = with_zero[idx[i]];
                c[d] = lead;
                report.entries.push_back(scan_one(Polynomial(std::move(c)), opts.omega_sq));
            }
            int pos = 0;
            while (pos < d && ++idx[pos] == with_zero.size()) idx[pos++] = 0;
            if (pos == d) break;
        }
    }

    // monomial and binomial families at higher degree
    static const Rational kSmall[] = {Rational(1), Rational(-1), Rational(1, 2)};
    for (int d = 4; d <= max_degree; ++d) {
        for (const auto& a : opts.coeff_samples)
            report.entries.push_back(scan_one(Polynomial::monomial(a, d), opts.omega_sq));
        for (int e = 0; e < d; ++e)
            for (const auto& a : kSmall)
                for (const auto& b : kSmall)
                    report.entries.push_back(scan_one(
                        Polynomial::monomial(a, d) + Polynomial::monomial(b, e), opts.omega_sq));
    }
    return report;
}

}  // namespace emden::poly
