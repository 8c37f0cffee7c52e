#pragma once

#include <string>
#include <vector>

#include "multisieve/numeric.hpp"

namespace multisieve {

/// Element of F_{p^a}: coefficient vector of length a, little-endian
/// (coeffs[i] multiplies t^i), every residue fully reduced mod p.
struct FqElement {
    std::vector<unsigned> coeffs;

    bool operator==(const FqElement&) const = default;
};

/// Arithmetic in F_q, q = p^a, as polynomials over F_p modulo a fixed monic
/// irreducible. The modulus is the lexicographically smallest monic
/// irreducible of degree a (coefficients compared low-degree-first), found
/// by exhaustive search with trial division; a = 1 uses the modulus t - 0,
/// i.e. plain mod-p arithmetic. Desk-scale only: q <= 10^4.
class FieldSpec {
public:
    static FieldSpec make(unsigned p, unsigned a);

    unsigned p() const { return p_; }
    unsigned a() const { return a_; }
    unsigned q() const { return q_; }
    /// Monic modulus, little-endian, length a+1.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    FqElement zero() const;
    FqElement one() const;
    bool is_zero(const FqElement& x) const;

    /// Element with coefficient vector = digits of index base p,
    /// low-degree-first; index in [0, q). Defines the canonical total order.
    FqElement from_index(unsigned index) const;
    unsigned index_of(const FqElement& x) const;
    std::vector<FqElement> enumerate_elements() const;

    FqElement add(const FqElement& x, const FqElement& y) const;
    FqElement neg(const FqElement& x) const;
    FqElement sub(const FqElement& x, const FqElement& y) const;
    FqElement mul(const FqElement& x, const FqElement& y) const;
    /// Multiplicative inverse; inv(0) is an error.
    FqElement inv(const FqElement& x) const;
    /// (m mod p) * x; realizes integer scalars like cycle lengths acting on F_q.
    FqElement int_scale(long m, const FqElement& x) const;

    /// Comma-separated residues, low-degree-first: "c0,c1,...".
    std::string render(const FqElement& x) const;
    /// Accepts 1..a comma-separated residues; missing high-degree
    /// coefficients are zero.
    FqElement parse(const std::string& text) const;

private:
    unsigned p_ = 0, a_ = 0, q_ = 0;
    std::vector<unsigned> modulus_;

    void validate(const FqElement& x) const;
};

} // namespace multisieve
