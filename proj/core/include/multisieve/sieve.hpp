#pragma once

#include <type_traits>
#include <utility>
#include <vector>

#include "multisieve/cycle_type.hpp"
#include "multisieve/numeric.hpp"
#include "multisieve/symmetric_set.hpp"

namespace multisieve {

/// w_j(tau) = prod over cycle lengths l of (1 - (j+1) [ (j+1) | l ]).
/// Selects multisets with every multiplicity <= j; equals sign(tau) at j=1
/// and 1 once j is at least every cycle length.
Int weight_bounded(const std::vector<unsigned>& lengths, unsigned j);

/// w-bar_d(tau) = [x^d] prod over cycle lengths l of (1 - (1-x)^l),
/// extracted by exact polynomial multiplication. Selects multisets with
/// exactly d distinct elements.
Int weight_distinct(const std::vector<unsigned>& lengths, unsigned d);

/// |M(X)|: number of k-multisets satisfying the restriction X, as
/// (1/k!) sum over cycle types of C(tau) |X_tau|. The pre-division sum must
/// be divisible by k!; a failure signals a non-symmetric set or a faulty
/// oracle and raises integrity_error.
Int count_multisets(const SymmetricSetSpec& X);

/// |M_j(X)|: multisets with every multiplicity at most j (j >= 1).
Int count_multisets_bounded(const SymmetricSetSpec& X, unsigned j);

/// |M-bar_d(X)|: multisets with exactly d distinct elements. d > k gives 0;
/// d = 0 gives 0 unless k = 0.
Int count_multisets_distinct(const SymmetricSetSpec& X, unsigned d);

/// |X-bar|: tuples in X with pairwise distinct coordinates, as the signed
/// sum over cycle types sign(tau) C(tau) |X_tau|. Internally checked to
/// equal k! |M-bar_k(X)|.
Int count_distinct_tuples(const SymmetricSetSpec& X);

/// Number of cycle-type terms the sieve evaluates for degree k, i.e. the
/// partition number p(k).
unsigned long sieve_term_count(unsigned k);

namespace detail {

struct SieveTerm {
    CycleType type;
    std::vector<unsigned> lengths; // decreasing
    Int class_size;
    Int fixed_points;
};

/// One term per cycle type of S_k, in integer_partitions order.
std::vector<SieveTerm> collect_sieve_terms(const SymmetricSetSpec& X);

/// Deterministic sample of (tuple, transposed tuple) pairs used to
/// spot-check that a caller-supplied function is symmetric.
std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> symmetry_probe_pairs(
    const ExplicitSet& X);

} // namespace detail

/// Caller-supplied symmetric function on tuples of X, valued in an exact
/// commutative ring R chosen by the caller. R must provide value-semantics
/// zero on default construction, operator+=, operator*(R, Int), and an
/// ADL-visible ring_divide_exact(R, Int). Floating-point rings are rejected
/// by contract. Symmetry is spot-checked on sampled tuples under
/// transpositions when the sum runs.
template <typename R>
struct SymmetricFunction {
    static_assert(!std::is_floating_point_v<R>,
                  "weighted sums require an exact ring; floating point is rejected by contract");
    std::function<R(const std::vector<unsigned>&)> eval;
};

inline Rat ring_divide_exact(const Rat& value, const Int& n) {
    if (n == 0) throw integrity_error("ring_divide_exact: division by zero");
    return value / Rat(n);
}

namespace detail {

/// (1/k!) sum over cycle types of weight(lengths) * sum_{x in X_tau} f(x),
/// the shared engine behind both weighted sums. Explicit variant only.
template <typename R, typename WeightFn>
R weighted_sieve_sum(const SymmetricSetSpec& X, const SymmetricFunction<R>& f,
                     WeightFn&& weight) {
    const ExplicitSet& E = X.explicit_set();
    if (!f.eval) throw validation_error("weighted sum: null function");
    for (const auto& [a, b] : symmetry_probe_pairs(E)) {
        if (!(f.eval(a) == f.eval(b)))
            throw validation_error("weighted sum: function is not symmetric under "
                                   "coordinate transposition");
    }
    const unsigned k = X.k();
    const unsigned d = E.ground_size();
    R total{};
    for (const CycleType& t : integer_partitions(static_cast<int>(k))) {
        const std::vector<unsigned> lengths = t.lengths();
        Int w = weight(lengths) * conjugacy_class_size(t);
        if (w == 0) continue;
        const unsigned m = t.cycle_count();
        R subtotal{};
        if (m == 0) {
            if (E.contains({})) subtotal += f.eval({});
        } else if (d > 0) {
            std::vector<unsigned> choice(m, 0);
            std::vector<unsigned> tuple(k, 0);
            while (true) {
                unsigned pos = 0;
                for (unsigned c = 0; c < m; ++c)
                    for (unsigned r = 0; r < lengths[c]; ++r) tuple[pos++] = choice[c];
                if (E.contains(tuple)) subtotal += f.eval(tuple);
                unsigned i = m;
                while (i > 0 && choice[i - 1] + 1 == d) choice[--i] = 0;
                if (i == 0) break;
                ++choice[i - 1];
            }
        }
        total += subtotal * w;
    }
    return ring_divide_exact(total, factorial(k));
}

} // namespace detail

/// sum of f over M_j(X), one evaluation per multiset representative.
template <typename R>
R weighted_sum_bounded(const SymmetricSetSpec& X, const SymmetricFunction<R>& f, unsigned j) {
    if (j < 1) throw validation_error("weighted_sum_bounded: j must be at least 1");
    return detail::weighted_sieve_sum(
        X, f, [j](const std::vector<unsigned>& lengths) { return weight_bounded(lengths, j); });
}

/// sum of f over M-bar_d(X), one evaluation per multiset representative.
template <typename R>
R weighted_sum_distinct(const SymmetricSetSpec& X, const SymmetricFunction<R>& f, unsigned d) {
    if (d < 1 || d > X.k())
        throw validation_error("weighted_sum_distinct: d must satisfy 1 <= d <= k");
    return detail::weighted_sieve_sum(
        X, f, [d](const std::vector<unsigned>& lengths) { return weight_distinct(lengths, d); });
}

} // namespace multisieve
