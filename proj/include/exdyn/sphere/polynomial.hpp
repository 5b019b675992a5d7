#pragma once

#include <cctype>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <exdyn/errors.hpp>
#include <exdyn/sphere/sphere.hpp>

namespace exdyn::sphere {

// Dense polynomial with complex coefficients, low degree first.
class Polynomial {
public:
    Polynomial() : coeffs_{cplx(0.0, 0.0)} {}

    explicit Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(cplx(0.0, 0.0));
        trim();
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coefficients() const { return coeffs_; }
    cplx coefficient(int k) const {
        return k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : cplx(0.0, 0.0);
    }
    cplx leading() const { return coeffs_.back(); }

    cplx eval(cplx z) const {
        cplx r = coeffs_.back();
        for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) r = r * z + *it;
        return r;
    }

    Polynomial derivative() const {
        if (degree() == 0) return Polynomial();
        std::vector<cplx> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d[k - 1] = coeffs_[k] * static_cast<double>(k);
        return Polynomial(std::move(d));
    }

    // this(q(z)), by Horner over polynomials.
    Polynomial compose(const Polynomial& q) const {
        Polynomial r({coeffs_.back()});
        for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
            r = r * q;
            r = r + Polynomial({*it});
        }
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), cplx(0.0, 0.0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), cplx(0.0, 0.0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }

private:
    void trim() {
        while (coeffs_.size() > 1 && coeffs_.back() == cplx(0.0, 0.0)) coeffs_.pop_back();
    }

    std::vector<cplx> coeffs_; // c0 + c1 z + ... + cd z^d
};

namespace detail {

// "a", "a+bi", "-bi", "i", "1.5e-3-2i" -> complex.  The split point is the
// last top-level +/- that is not an exponent sign.
inline cplx parse_complex_literal(std::string s, const std::string& context) {
    auto fail = [&]() -> cplx {
        throw parse_error("cannot parse complex literal \"" + s + "\" in " + context);
    };
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) return fail();

    auto parse_real = [&](std::string u, bool imag_unit_ok) -> double {
        if (imag_unit_ok) {
            if (u == "i" || u == "+i") return 1.0;
            if (u == "-i") return -1.0;
            if (!u.empty() && (u.back() == 'i' || u.back() == 'I')) u.pop_back();
        }
        if (u.empty()) fail();
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(u, &pos);
        } catch (...) {
            fail();
        }
        if (pos != u.size()) fail();
        return v;
    };

    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        char c = t[k];
        if ((c == '+' || c == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    bool ends_i = (t.back() == 'i' || t.back() == 'I');
    if (split == std::string::npos) {
        if (ends_i) return cplx(0.0, parse_real(t, true));
        return cplx(parse_real(t, false), 0.0);
    }
    if (!ends_i) return cplx(parse_real(t, false), 0.0); // e.g. "1e-3"
    return cplx(parse_real(t.substr(0, split), false), parse_real(t.substr(split), true));
}

// Expression form: sum of terms "[coef][*][z[^k]]", e.g. "z^2-1",
// "z^3+0.5z-2", "iz^2+z".  Coefficients per term are real or pure imaginary.
inline std::vector<cplx> parse_z_expression(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw parse_error("empty map expression");

    std::vector<cplx> coeffs;
    auto bump = [&](int k, cplx v) {
        if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(static_cast<std::size_t>(k) + 1, cplx(0.0, 0.0));
        coeffs[static_cast<std::size_t>(k)] += v;
    };

    std::size_t pos = 0;
    while (pos < t.size()) {
        double sign = 1.0;
        while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
            if (t[pos] == '-') sign = -sign;
            ++pos;
        }
        std::size_t start = pos;
        while (pos < t.size()) {
            char c = t[pos];
            if ((c == '+' || c == '-') && pos > start && t[pos - 1] != 'e' && t[pos - 1] != 'E') break;
            ++pos;
        }
        std::string term = t.substr(start, pos - start);
        if (term.empty()) throw parse_error("empty term in map expression \"" + text + "\"");

        int power = 0;
        std::size_t zpos = term.find_first_of("zZ");
        std::string coef = term;
        if (zpos != std::string::npos) {
            power = 1;
            coef = term.substr(0, zpos);
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            std::string rest = term.substr(zpos + 1);
            if (!rest.empty()) {
                if (rest[0] != '^') throw parse_error("bad term \"" + term + "\" in map expression");
                try {
                    std::size_t used = 0;
                    power = std::stoi(rest.substr(1), &used);
                    if (used != rest.size() - 1 || power < 0) throw parse_error("");
                } catch (...) {
                    throw parse_error("bad exponent in term \"" + term + "\"");
                }
            }
        }
        cplx value(1.0, 0.0);
        if (!coef.empty()) value = parse_complex_literal(coef, "map expression \"" + text + "\"");
        bump(power, sign * value);
    }
    return coeffs;
}

} // namespace detail

// A polynomial self-map of the Riemann sphere, degree >= 2 with nonzero
// leading coefficient.  Accepts either an expression in z ("z^2-1") or a
// comma-separated coefficient list, low degree first ("-1,0,1").
struct ComplexMapSpec {
    Polynomial poly;
    std::string source;

    int degree() const { return poly.degree(); }

    static ComplexMapSpec parse(const std::string& text) {
        std::vector<cplx> coeffs;
        if (text.find('z') != std::string::npos || text.find('Z') != std::string::npos) {
            coeffs = detail::parse_z_expression(text);
        } else {
            std::size_t start = 0;
            std::string t = text;
            while (start <= t.size()) {
                std::size_t comma = t.find(',', start);
                std::string item = t.substr(start, comma == std::string::npos ? comma : comma - start);
                coeffs.push_back(detail::parse_complex_literal(item, "coefficient list \"" + text + "\""));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        Polynomial p(std::move(coeffs));
        if (p.degree() < 2)
            throw parse_error("map \"" + text + "\" must be a polynomial of degree >= 2");
        if (p.leading() == cplx(0.0, 0.0))
            throw parse_error("map \"" + text + "\" has zero leading coefficient");
        return ComplexMapSpec{std::move(p), text};
    }
};

} // namespace exdyn::sphere
