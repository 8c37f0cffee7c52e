#include "multisieve/finite_field.hpp"

#include <algorithm>

namespace multisieve {

namespace {

// Dense little-endian polynomials over F_p, used only to build the field.

std::vector<unsigned> poly_mod(std::vector<unsigned> f, const std::vector<unsigned>& g,
                               unsigned p) {
    // g monic
    while (f.size() >= g.size()) {
        unsigned lead = f.back();
        if (lead != 0) {
            size_t shift = f.size() - g.size();
            for (size_t i = 0; i < g.size(); ++i) {
                unsigned sub = (static_cast<unsigned long>(lead) * g[i]) % p;
                f[shift + i] = (f[shift + i] + p - sub) % p;
            }
        }
        f.pop_back();
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

bool is_irreducible(const std::vector<unsigned>& candidate, unsigned p) {
    const unsigned deg = static_cast<unsigned>(candidate.size()) - 1;
    // trial division by every monic divisor of degree 1..deg/2
    for (unsigned ddeg = 1; 2 * ddeg <= deg; ++ddeg) {
        unsigned long total = 1;
        for (unsigned i = 0; i < ddeg; ++i) total *= p;
        for (unsigned long idx = 0; idx < total; ++idx) {
            std::vector<unsigned> g(ddeg + 1, 0);
            unsigned long rem = idx;
            for (unsigned i = 0; i < ddeg; ++i) {
                g[i] = rem % p;
                rem /= p;
            }
            g[ddeg] = 1;
            if (poly_mod(candidate, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

FieldSpec FieldSpec::make(unsigned p, unsigned a) {
    if (!is_prime(p)) throw validation_error("FieldSpec: p = " + std::to_string(p) + " is not prime");
    if (a < 1) throw validation_error("FieldSpec: a must be at least 1");
    unsigned long q = 1;
    for (unsigned i = 0; i < a; ++i) {
        q *= p;
        if (q > 10000) throw validation_error("FieldSpec: q = p^a exceeds the 10^4 ceiling");
    }
    FieldSpec F;
    F.p_ = p;
    F.a_ = a;
    F.q_ = static_cast<unsigned>(q);
    if (a == 1) {
        F.modulus_ = {0, 1}; // t - 0: plain mod-p arithmetic
        return F;
    }
    // Lexicographically smallest coefficient vector (c_0,...,c_{a-1}) first:
    // c_0 is the most significant digit of the search index.
    unsigned long space = 1;
    for (unsigned i = 0; i < a; ++i) space *= p;
    for (unsigned long idx = 0; idx < space; ++idx) {
        std::vector<unsigned> cand(a + 1, 0);
        unsigned long rem = idx;
        for (unsigned i = a; i-- > 0;) {
            cand[i] = rem % p;
            rem /= p;
        }
        cand[a] = 1;
        if (is_irreducible(cand, p)) {
            F.modulus_ = std::move(cand);
            return F;
        }
    }
    throw integrity_error("FieldSpec: no irreducible polynomial found"); // unreachable
}

void FieldSpec::validate(const FqElement& x) const {
    if (x.coeffs.size() != a_)
        throw validation_error("FqElement: coefficient vector length differs from a");
    for (unsigned c : x.coeffs)
        if (c >= p_) throw validation_error("FqElement: residue out of range");
}

FqElement FieldSpec::zero() const {
    return {std::vector<unsigned>(a_, 0)};
}

FqElement FieldSpec::one() const {
    FqElement e = zero();
    e.coeffs[0] = 1 % p_;
    return e;
}

bool FieldSpec::is_zero(const FqElement& x) const {
    validate(x);
    return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](unsigned c) { return c == 0; });
}

FqElement FieldSpec::from_index(unsigned index) const {
    if (index >= q_) throw validation_error("FieldSpec::from_index: index out of range");
    FqElement e = zero();
    for (unsigned i = 0; i < a_; ++i) {
        e.coeffs[i] = index % p_;
        index /= p_;
    }
    return e;
}

unsigned FieldSpec::index_of(const FqElement& x) const {
    validate(x);
    unsigned idx = 0;
    for (unsigned i = a_; i-- > 0;) idx = idx * p_ + x.coeffs[i];
    return idx;
}

std::vector<FqElement> FieldSpec::enumerate_elements() const {
    std::vector<FqElement> out;
    out.reserve(q_);
    for (unsigned i = 0; i < q_; ++i) out.push_back(from_index(i));
    return out;
}

FqElement FieldSpec::add(const FqElement& x, const FqElement& y) const {
    validate(x);
    validate(y);
    FqElement r = zero();
    for (unsigned i = 0; i < a_; ++i) r.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % p_;
    return r;
}

FqElement FieldSpec::neg(const FqElement& x) const {
    validate(x);
    FqElement r = zero();
    for (unsigned i = 0; i < a_; ++i) r.coeffs[i] = (p_ - x.coeffs[i]) % p_;
    return r;
}

FqElement FieldSpec::sub(const FqElement& x, const FqElement& y) const {
    return add(x, neg(y));
}

FqElement FieldSpec::mul(const FqElement& x, const FqElement& y) const {
    validate(x);
    validate(y);
    std::vector<unsigned> prod(2 * a_ - 1, 0);
    for (unsigned i = 0; i < a_; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (unsigned j = 0; j < a_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<unsigned long>(x.coeffs[i]) * y.coeffs[j]) % p_;
    }
    std::vector<unsigned> reduced = poly_mod(std::move(prod), modulus_, p_);
    FqElement r = zero();
    for (size_t i = 0; i < reduced.size(); ++i) r.coeffs[i] = reduced[i];
    return r;
}

FqElement FieldSpec::inv(const FqElement& x) const {
    if (is_zero(x)) throw validation_error("FieldSpec::inv: zero has no inverse");
    // x^(q-2) by square and multiply
    FqElement result = one();
    FqElement base = x;
    unsigned e = q_ - 2;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FqElement FieldSpec::int_scale(long m, const FqElement& x) const {
    validate(x);
    long mm = m % static_cast<long>(p_);
    if (mm < 0) mm += p_;
    FqElement r = zero();
    for (unsigned i = 0; i < a_; ++i)
        r.coeffs[i] = (static_cast<unsigned long>(mm) * x.coeffs[i]) % p_;
    return r;
}

std::string FieldSpec::render(const FqElement& x) const {
    validate(x);
    std::string s;
    for (unsigned i = 0; i < a_; ++i) {
        if (i) s += ",";
        s += std::to_string(x.coeffs[i]);
    }
    return s;
}

FqElement FieldSpec::parse(const std::string& text) const {
    FqElement e = zero();
    size_t pos = 0, idx = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw validation_error("FqElement parse: bad residue '" + piece + "'");
        unsigned long v = std::stoul(piece);
        if (idx >= a_) throw validation_error("FqElement parse: more residues than field degree");
        if (v >= p_) throw validation_error("FqElement parse: residue " + piece +
                                            " not reduced mod " + std::to_string(p_));
        e.coeffs[idx++] = static_cast<unsigned>(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return e;
}

} // namespace multisieve
