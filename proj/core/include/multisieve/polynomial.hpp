#pragma once

#include <optional>
#include <vector>

#include "multisieve/numeric.hpp"

namespace multisieve {

/// Dense univariate polynomial with exact rational coefficients, doubling
/// as a truncated power series when a truncation degree is set.
///
/// A plain polynomial keeps no trailing zero coefficients; coefficients
/// beyond its degree read as zero. A truncated series carries coefficients
/// up to its truncation degree; asking for a coefficient beyond that is an
/// error, not zero, because the value is genuinely unknown.
class Polynomial {
public:
    Polynomial() = default; // zero polynomial
    explicit Polynomial(std::vector<Rat> coeffs);
    Polynomial(std::vector<Rat> coeffs, unsigned truncation_degree);

    static Polynomial constant(const Rat& c);
    static Polynomial monomial(const Rat& c, unsigned degree);

    bool is_truncated() const { return trunc_.has_value(); }
    std::optional<unsigned> truncation_degree() const { return trunc_; }

    Rat coeff(unsigned n) const;
    /// Degree of the highest stored nonzero coefficient (0 for the zero polynomial).
    unsigned degree() const;
    bool is_zero() const;

    /// Reinterprets as a series truncated at degree n (dropping higher terms).
    Polynomial truncate(unsigned n) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    std::vector<Rat> coeffs_;
    std::optional<unsigned> trunc_;

    void normalize();
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Rat poly_coeff(const Polynomial& a, unsigned n);

/// (1 - u^e)^power as a series truncated at degree trunc; power may be
/// negative, in which case the generalized binomial series is used.
Polynomial series_one_minus_upow(unsigned e, long power, unsigned trunc);

/// exp of a series with zero constant term, truncated at degree trunc.
Polynomial series_exp(const Polynomial& s, unsigned trunc);

} // namespace multisieve
