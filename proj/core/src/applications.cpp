#include "multisieve/applications.hpp"

#include <algorithm>
#include <numeric>

#include "multisieve/cycle_type.hpp"
#include "multisieve/polynomial.hpp"
#include "multisieve/sieve.hpp"

namespace multisieve {

Int v_of(const FieldSpec& F, const FqElement& b) {
    return F.is_zero(b) ? Int(F.q() - 1) : Int(-1);
}

Int partition_count_closed(const FieldSpec& F, unsigned k, const FqElement& b) {
    const unsigned p = F.p();
    const Int q(F.q());
    Rat total = Rat(binomial(q + k - 2, k)) / Rat(q);
    if (k % p == 0) {
        total += Rat(v_of(F, b) * binomial(exact_div(q, p, "partition_count_closed") + k / p - 1,
                                           k / p)) /
                 Rat(q);
    } else if (k % p == 1) {
        total -= Rat(v_of(F, b) * binomial(exact_div(q, p, "partition_count_closed") + k / p - 1,
                                           k / p)) /
                 Rat(q);
    }
    return rat_to_int(total, "partition_count_closed");
}

namespace {

Int partition_count_hat_closed(const FieldSpec& F, unsigned k, const FqElement& b) {
    const Int q(F.q());
    Rat total = Rat(binomial(q + k - 1, k)) / Rat(q);
    if (k % F.p() == 0 && k > 0) {
        total += Rat(v_of(F, b) *
                     binomial(exact_div(q, F.p(), "partition_count_hat") + k / F.p() - 1,
                              k / F.p())) /
                 Rat(q);
    }
    return rat_to_int(total, "partition_count_hat_closed");
}

} // namespace

Int partition_count_hat_sieve(const FieldSpec& F, unsigned k, const FqElement& b) {
    if (k == 0) return F.is_zero(b) ? 1 : 0;
    const unsigned p = F.p();
    const Int q(F.q());
    const Int vb = v_of(F, b);
    // X_tau for cycle lengths (l_1,...,l_m) is the solution set of
    // l_1 x_1 + ... + l_m x_m = b: q^{m-1} solutions, times (v(b)+1) when
    // every l_i vanishes mod p.
    auto spec = SymmetricSetSpec::from_oracle(k, [&](const std::vector<unsigned>& lengths) {
        const unsigned m = static_cast<unsigned>(lengths.size());
        bool all_vanish = std::all_of(lengths.begin(), lengths.end(),
                                      [p](unsigned l) { return l % p == 0; });
        Int count = int_pow(q, m - 1);
        if (all_vanish) count *= vb + 1;
        return count;
    });
    Int result = count_multisets(spec);
    Int closed = partition_count_hat_closed(F, k, b);
    if (result != closed)
        throw integrity_error("partition_count_hat_sieve: sieve value " + result.get_str() +
                              " disagrees with the closed form " + closed.get_str());
    return result;
}

Int partition_count_sieve(const FieldSpec& F, unsigned k, const FqElement& b) {
    Int hat_k = partition_count_hat_sieve(F, k, b);
    if (k == 0) return hat_k;
    return hat_k - partition_count_hat_sieve(F, k - 1, b);
}

namespace {

void partition_brute_rec(const FieldSpec& F, const std::vector<FqElement>& nonzero,
                         unsigned remaining, unsigned start, const FqElement& sum,
                         const FqElement& target, Int& count) {
    if (remaining == 0) {
        if (sum == target) ++count;
        return;
    }
    for (unsigned i = start; i < nonzero.size(); ++i)
        partition_brute_rec(F, nonzero, remaining - 1, i, F.add(sum, nonzero[i]), target, count);
}

} // namespace

Int partition_count_brute(const FieldSpec& F, unsigned k, const FqElement& b) {
    std::vector<FqElement> nonzero;
    for (const FqElement& x : F.enumerate_elements())
        if (!F.is_zero(x)) nonzero.push_back(x);
    Int count = 0;
    partition_brute_rec(F, nonzero, k, 0, F.zero(), b, count);
    return count;
}

Int necklace_count(unsigned n, unsigned q) {
    if (n < 1) throw validation_error("necklace_count: n must be at least 1");
    Int sum = 0;
    for (unsigned e : divisors(n)) sum += Int(euler_phi(e)) * int_pow(Int(q), n / e);
    return exact_div(sum, Int(n), "necklace_count");
}

Int necklace_count_brute(unsigned n, unsigned q) {
    if (n < 1) throw validation_error("necklace_count_brute: n must be at least 1");
    double space = 1.0;
    for (unsigned i = 0; i < n; ++i) space *= q;
    if (space > 1e7)
        throw validation_error("necklace_count_brute refused: q^n exceeds the 10^7 ceiling");
    if (q == 0) return 0;
    std::vector<unsigned> s(n, 0);
    Int count = 0;
    while (true) {
        // count strings that are the minimal rotation of their orbit
        bool minimal = true;
        std::vector<unsigned> rot = s;
        for (unsigned r = 1; r < n && minimal; ++r) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < s) minimal = false;
        }
        if (minimal) ++count;
        unsigned i = n;
        while (i > 0 && s[i - 1] + 1 == q) s[--i] = 0;
        if (i == 0) break;
        ++s[i - 1];
    }
    return count;
}

Int zerosum_bounded_count(unsigned n, unsigned q, unsigned k) {
    if (n < 1 || q < 1) throw validation_error("zerosum_bounded_count: need n, q >= 1");
    if (k > n * (q - 1)) return 0;
    Int sum = 0;
    for (unsigned e : divisors(n)) {
        if (k % e != 0) continue;
        const unsigned g = std::gcd(e, q);
        const unsigned l = e / g * q; // lcm(e, q)
        Polynomial series = series_one_minus_upow(e, -static_cast<long>(n / e), k) *
                            series_one_minus_upow(l, static_cast<long>(g * (n / e)), k);
        sum += Int(euler_phi(e)) * rat_to_int(series.coeff(k), "zerosum_bounded_count");
    }
    return exact_div(sum, Int(n), "zerosum_bounded_count");
}

Int zerosum_total(unsigned n, unsigned q) {
    if (n < 1 || q < 1) throw validation_error("zerosum_total: need n, q >= 1");
    Int sum = 0;
    for (unsigned e : divisors(n)) {
        if (std::gcd(e, q) != 1) continue;
        sum += Int(euler_phi(e)) * int_pow(Int(q), n / e);
    }
    return exact_div(sum, Int(n), "zerosum_total");
}

namespace {

template <typename Visit>
void for_each_multiplicity_vector(unsigned n, unsigned q, Visit&& visit) {
    double space = 1.0;
    for (unsigned i = 0; i < n; ++i) space *= q;
    if (space > 1e7)
        throw validation_error("zerosum brute enumeration refused: q^n exceeds the 10^7 ceiling");
    std::vector<unsigned> mult(n, 0); // mult[i] in [0, q-1]
    while (true) {
        visit(mult);
        unsigned i = n;
        while (i > 0 && mult[i - 1] + 1 == q) mult[--i] = 0;
        if (i == 0) break;
        ++mult[i - 1];
    }
}

} // namespace

Int zerosum_brute(unsigned n, unsigned q) {
    if (n < 1 || q < 1) throw validation_error("zerosum_brute: need n, q >= 1");
    Int count = 0;
    for_each_multiplicity_vector(n, q, [&](const std::vector<unsigned>& mult) {
        unsigned long s = 0;
        for (unsigned i = 0; i < n; ++i) s += static_cast<unsigned long>(mult[i]) * i;
        if (s % n == 0) ++count;
    });
    return count;
}

Int zerosum_brute_bounded(unsigned n, unsigned q, unsigned k) {
    if (n < 1 || q < 1) throw validation_error("zerosum_brute_bounded: need n, q >= 1");
    Int count = 0;
    for_each_multiplicity_vector(n, q, [&](const std::vector<unsigned>& mult) {
        unsigned long s = 0, size = 0;
        for (unsigned i = 0; i < n; ++i) {
            s += static_cast<unsigned long>(mult[i]) * i;
            size += mult[i];
        }
        if (size == k && s % n == 0) ++count;
    });
    return count;
}

std::pair<Int, Int> lemma_gf_check(unsigned n, unsigned e, unsigned j, unsigned k) {
    if (e == 0 || n % e != 0) throw validation_error("lemma_gf_check: e must divide n");
    if (j < 1) throw validation_error("lemma_gf_check: j must be at least 1");
    Rat lhs = cycle_index_eval(k, [&](unsigned i) {
        long w = (i % (j + 1) == 0) ? -(static_cast<long>(j)) : 1;
        return Rat(i % e == 0 ? w * static_cast<long>(n) : 0);
    });
    const unsigned g = std::gcd(e, j + 1);
    const unsigned l = e / g * (j + 1); // lcm(e, j+1)
    Polynomial series = series_one_minus_upow(e, -static_cast<long>(n / e), k) *
                        series_one_minus_upow(l, static_cast<long>(g * (n / e)), k);
    Int rhs = rat_to_int(Rat(factorial(k)) * series.coeff(k), "lemma_gf_check");
    return {rat_to_int(lhs, "lemma_gf_check"), rhs};
}

} // namespace multisieve
