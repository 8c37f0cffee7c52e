#include "multisieve/sieve.hpp"

#include <random>

#include "multisieve/polynomial.hpp"

namespace multisieve {

Int weight_bounded(const std::vector<unsigned>& lengths, unsigned j) {
    if (j < 1) throw validation_error("weight_bounded: j must be at least 1");
    Int w = 1;
    for (unsigned l : lengths)
        if (l % (j + 1) == 0) w *= -static_cast<long>(j);
    return w;
}

Int weight_distinct(const std::vector<unsigned>& lengths, unsigned d) {
    if (d < 1) throw validation_error("weight_distinct: d must be at least 1");
    Polynomial prod = Polynomial::constant(Rat(1)).truncate(d);
    for (unsigned l : lengths) {
        // 1 - (1-x)^l, coefficient of x^r is (-1)^{r+1} C(l, r) for r >= 1
        std::vector<Rat> c(std::min(l, d) + 1, Rat(0));
        for (unsigned r = 1; r <= l && r <= d; ++r) {
            Int b = binomial(Int(l), r);
            c[r] = Rat(r % 2 == 1 ? b : -b);
        }
        prod = prod * Polynomial(std::move(c), d);
    }
    Int w = rat_to_int(prod.coeff(d), "weight_distinct");
    if (d < lengths.size() && w != 0)
        throw integrity_error("weight_distinct: nonzero coefficient below the cycle count");
    return w;
}

namespace detail {

std::vector<SieveTerm> collect_sieve_terms(const SymmetricSetSpec& X) {
    std::vector<SieveTerm> terms;
    for (const CycleType& t : integer_partitions(static_cast<int>(X.k()))) {
        SieveTerm term;
        term.lengths = t.lengths();
        term.class_size = conjugacy_class_size(t);
        term.fixed_points = X.fixed_point_count(term.lengths);
        term.type = t;
        terms.push_back(std::move(term));
    }
    return terms;
}

std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> symmetry_probe_pairs(
    const ExplicitSet& X) {
    std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> pairs;
    const unsigned k = X.k();
    if (k < 2 || X.tuples().empty()) return pairs;
    std::mt19937_64 rng(0x5eedf00du);
    const size_t n = X.tuples().size();
    const size_t samples = std::min<size_t>(n, 8);
    for (size_t s = 0; s < samples; ++s) {
        const auto& t = X.tuples()[s * n / samples];
        std::uniform_int_distribution<unsigned> pick(0, k - 1);
        unsigned i = pick(rng), j = pick(rng);
        if (i == j) j = (j + 1) % k;
        auto u = t;
        std::swap(u[i], u[j]);
        pairs.emplace_back(t, std::move(u));
    }
    return pairs;
}

} // namespace detail

namespace {

Int nonnegative(Int v, const char* what) {
    if (v < 0) throw integrity_error(std::string(what) + ": negative count");
    return v;
}

} // namespace

Int count_multisets(const SymmetricSetSpec& X) {
    Int sum = 0;
    for (const auto& term : detail::collect_sieve_terms(X))
        sum += term.class_size * term.fixed_points;
    return nonnegative(exact_div(sum, factorial(X.k()), "count_multisets"), "count_multisets");
}

Int count_multisets_bounded(const SymmetricSetSpec& X, unsigned j) {
    if (j < 1) throw validation_error("count_multisets_bounded: j must be at least 1");
    Int sum = 0;
    for (const auto& term : detail::collect_sieve_terms(X))
        sum += weight_bounded(term.lengths, j) * term.class_size * term.fixed_points;
    return nonnegative(exact_div(sum, factorial(X.k()), "count_multisets_bounded"),
                       "count_multisets_bounded");
}

Int count_multisets_distinct(const SymmetricSetSpec& X, unsigned d) {
    const unsigned k = X.k();
    if (d > k) return 0;
    if (d == 0) return k == 0 ? count_multisets(X) : Int(0);
    Int sum = 0;
    for (const auto& term : detail::collect_sieve_terms(X))
        sum += weight_distinct(term.lengths, d) * term.class_size * term.fixed_points;
    return nonnegative(exact_div(sum, factorial(k), "count_multisets_distinct"),
                       "count_multisets_distinct");
}

Int count_distinct_tuples(const SymmetricSetSpec& X) {
    const unsigned k = X.k();
    const auto terms = detail::collect_sieve_terms(X);
    Int sum = 0;
    for (const auto& term : terms) {
        const unsigned m = static_cast<unsigned>(term.lengths.size());
        Int t = term.class_size * term.fixed_points;
        sum += ((k - m) % 2 == 0) ? t : -t;
    }
    nonnegative(sum, "count_distinct_tuples");
    if (k >= 1) {
        // same terms through the d = k distinct weight; the two routes must agree
        Int viaDistinct = 0;
        for (const auto& term : terms)
            viaDistinct += weight_distinct(term.lengths, k) * term.class_size * term.fixed_points;
        if (viaDistinct != sum)
            throw integrity_error("count_distinct_tuples: signed sum disagrees with k! |M-bar_k|");
    }
    return sum;
}

unsigned long sieve_term_count(unsigned k) {
    return integer_partitions(static_cast<int>(k)).size();
}

} // namespace multisieve
