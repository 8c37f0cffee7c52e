#include "multisieve/polynomial.hpp"

#include <algorithm>

namespace multisieve {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Polynomial::Polynomial(std::vector<Rat> coeffs, unsigned truncation_degree)
    : coeffs_(std::move(coeffs)), trunc_(truncation_degree) {
    normalize();
}

Polynomial Polynomial::constant(const Rat& c) {
    return Polynomial(std::vector<Rat>{c});
}

Polynomial Polynomial::monomial(const Rat& c, unsigned degree) {
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize() {
    if (trunc_) {
        if (coeffs_.size() > *trunc_ + 1) coeffs_.resize(*trunc_ + 1);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Polynomial::coeff(unsigned n) const {
    if (trunc_ && n > *trunc_)
        throw validation_error("Polynomial::coeff: degree " + std::to_string(n) +
                               " exceeds truncation degree " + std::to_string(*trunc_));
    if (n >= coeffs_.size()) return Rat(0);
    return coeffs_[n];
}

unsigned Polynomial::degree() const {
    return coeffs_.empty() ? 0u : static_cast<unsigned>(coeffs_.size() - 1);
}

bool Polynomial::is_zero() const {
    return coeffs_.empty();
}

Polynomial Polynomial::truncate(unsigned n) const {
    std::vector<Rat> c = coeffs_;
    if (c.size() > n + 1) c.resize(n + 1);
    return Polynomial(std::move(c), n);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {

std::optional<unsigned> combine_trunc(const Polynomial& a, const Polynomial& b) {
    auto ta = a.truncation_degree();
    auto tb = b.truncation_degree();
    if (ta && tb) return std::min(*ta, *tb);
    if (ta) return ta;
    return tb;
}

} // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    auto trunc = combine_trunc(a, b);
    unsigned top = std::max(a.degree(), b.degree());
    if (trunc) top = std::min(top, *trunc); // top never exceeds either operand's truncation
    std::vector<Rat> c(top + 1, Rat(0));
    for (unsigned i = 0; i <= top; ++i) c[i] = a.coeff(i) + b.coeff(i);
    return trunc ? Polynomial(std::move(c), *trunc) : Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    auto trunc = combine_trunc(a, b);
    if (a.is_zero() || b.is_zero())
        return trunc ? Polynomial({}, *trunc) : Polynomial();
    unsigned top = a.degree() + b.degree();
    if (trunc) top = std::min(top, *trunc);
    std::vector<Rat> c(top + 1, Rat(0));
    for (unsigned i = 0; i <= a.degree(); ++i) {
        if (i > top) break;
        Rat ai = a.coeff(i);
        if (ai == 0) continue;
        for (unsigned j = 0; j <= b.degree() && i + j <= top; ++j) {
            Rat bj = b.coeff(j);
            if (bj == 0) continue;
            c[i + j] += ai * bj;
        }
    }
    return trunc ? Polynomial(std::move(c), *trunc) : Polynomial(std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    unsigned top = std::max(a.degree(), b.degree());
    for (unsigned i = 0; i <= top; ++i) {
        Rat ca = (a.is_truncated() && i > *a.truncation_degree()) ? Rat(0) : a.coeff(i);
        Rat cb = (b.is_truncated() && i > *b.truncation_degree()) ? Rat(0) : b.coeff(i);
        if (ca != cb) return false;
    }
    return true;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    return a * b;
}

Rat poly_coeff(const Polynomial& a, unsigned n) {
    return a.coeff(n);
}

Polynomial series_one_minus_upow(unsigned e, long power, unsigned trunc) {
    if (e == 0) throw validation_error("series_one_minus_upow: exponent e must be positive");
    std::vector<Rat> c(trunc + 1, Rat(0));
    if (power >= 0) {
        // (1 - u^e)^m by the binomial theorem
        unsigned m = static_cast<unsigned>(power);
        for (unsigned j = 0; j <= m && static_cast<unsigned long>(j) * e <= trunc; ++j) {
            Int term = binomial(Int(m), j);
            if (j % 2 == 1) term = -term;
            c[j * e] = Rat(term);
        }
    } else {
        // (1 - u^e)^{-m} = sum_j C(m+j-1, j) u^{ej}
        unsigned m = static_cast<unsigned>(-power);
        for (unsigned j = 0; static_cast<unsigned long>(j) * e <= trunc; ++j)
            c[j * e] = Rat(binomial(Int(m) + j - 1, j));
    }
    return Polynomial(std::move(c), trunc);
}

Polynomial series_exp(const Polynomial& s, unsigned trunc) {
    if (!s.is_zero() && s.coeff(0) != 0)
        throw validation_error("series_exp: series must have zero constant term");
    Polynomial sx = s.truncate(trunc);
    Polynomial result = Polynomial::constant(Rat(1)).truncate(trunc);
    Polynomial term = result;
    // term after iteration m is s^m / m!
    for (unsigned m = 1; m <= trunc; ++m) {
        term = term * sx;
        if (term.is_zero()) break;
        std::vector<Rat> c(trunc + 1, Rat(0));
        for (unsigned i = 0; i <= trunc; ++i) {
            Rat v = term.coeff(i);
            if (v != 0) c[i] = v / Rat(m);
        }
        term = Polynomial(std::move(c), trunc);
        result = result + term;
    }
    return result;
}

} // namespace multisieve
