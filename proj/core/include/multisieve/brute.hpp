#pragma once

#include <vector>

#include "multisieve/numeric.hpp"
#include "multisieve/sieve.hpp"
#include "multisieve/symmetric_set.hpp"

namespace multisieve {

/// Canonical representatives (sorted tuples of label indices) of the
/// k-multisets satisfying X, each exactly once, in lexicographic order.
/// Refuses ground sets with |D|^k beyond the documented desk-scale ceiling.
std::vector<std::vector<unsigned>> enumerate_restricted_multisets(const ExplicitSet& X);

Int brute_count_multisets(const ExplicitSet& X);
Int brute_count_bounded(const ExplicitSet& X, unsigned j);
Int brute_count_distinct(const ExplicitSet& X, unsigned d);
/// Tuples of X with pairwise distinct coordinates, counted directly.
Int brute_count_distinct_tuples(const ExplicitSet& X);

template <typename R>
R brute_weighted_bounded(const ExplicitSet& X, const SymmetricFunction<R>& f, unsigned j) {
    R total{};
    for (const auto& rep : enumerate_restricted_multisets(X)) {
        unsigned run = 1, maxrun = 1;
        for (size_t i = 1; i < rep.size(); ++i) {
            run = (rep[i] == rep[i - 1]) ? run + 1 : 1;
            maxrun = std::max(maxrun, run);
        }
        if (rep.empty() || maxrun <= j) total += f.eval(rep);
    }
    return total;
}

template <typename R>
R brute_weighted_distinct(const ExplicitSet& X, const SymmetricFunction<R>& f, unsigned d) {
    R total{};
    for (const auto& rep : enumerate_restricted_multisets(X)) {
        unsigned distinct = rep.empty() ? 0 : 1;
        for (size_t i = 1; i < rep.size(); ++i)
            if (rep[i] != rep[i - 1]) ++distinct;
        if (distinct == d) total += f.eval(rep);
    }
    return total;
}

struct InclusionExclusionResult {
    Int value;
    unsigned long long terms;
};

/// |X-bar| by the classical inclusion-exclusion over the pair constraints
/// x_i = x_j: an alternating sum with 2^C(k,2) terms, each realized by
/// merging coordinate indexes and counting tuples constant on the merged
/// blocks. Kept as the sieve's correctness witness and performance foil;
/// refuses k > 5, where the term count blows up.
InclusionExclusionResult inclusion_exclusion_distinct(const ExplicitSet& X);

} // namespace multisieve
