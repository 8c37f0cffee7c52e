#include "multisieve/brute.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace multisieve {

namespace {

constexpr double kEnumerationCeiling = 1e7;

void check_ceiling(const ExplicitSet& X) {
    double space = 1.0;
    for (unsigned i = 0; i < X.k(); ++i) space *= static_cast<double>(X.ground_size());
    if (space > kEnumerationCeiling)
        throw validation_error("brute enumeration refused: |D|^k exceeds the 10^7 ceiling");
}

unsigned count_distinct_sorted(const std::vector<unsigned>& rep) {
    unsigned distinct = rep.empty() ? 0 : 1;
    for (size_t i = 1; i < rep.size(); ++i)
        if (rep[i] != rep[i - 1]) ++distinct;
    return distinct;
}

unsigned max_multiplicity_sorted(const std::vector<unsigned>& rep) {
    unsigned run = 1, maxrun = rep.empty() ? 0 : 1;
    for (size_t i = 1; i < rep.size(); ++i) {
        run = (rep[i] == rep[i - 1]) ? run + 1 : 1;
        maxrun = std::max(maxrun, run);
    }
    return maxrun;
}

} // namespace

std::vector<std::vector<unsigned>> enumerate_restricted_multisets(const ExplicitSet& X) {
    check_ceiling(X);
    std::set<std::vector<unsigned>> reps;
    for (auto tuple : X.tuples()) {
        std::sort(tuple.begin(), tuple.end());
        reps.insert(std::move(tuple));
    }
    return {reps.begin(), reps.end()};
}

Int brute_count_multisets(const ExplicitSet& X) {
    return Int(static_cast<unsigned long>(enumerate_restricted_multisets(X).size()));
}

Int brute_count_bounded(const ExplicitSet& X, unsigned j) {
    if (j < 1) throw validation_error("brute_count_bounded: j must be at least 1");
    Int n = 0;
    for (const auto& rep : enumerate_restricted_multisets(X))
        if (rep.empty() || max_multiplicity_sorted(rep) <= j) ++n;
    return n;
}

Int brute_count_distinct(const ExplicitSet& X, unsigned d) {
    Int n = 0;
    for (const auto& rep : enumerate_restricted_multisets(X))
        if (count_distinct_sorted(rep) == d) ++n;
    return n;
}

Int brute_count_distinct_tuples(const ExplicitSet& X) {
    check_ceiling(X);
    Int n = 0;
    for (const auto& tuple : X.tuples()) {
        std::set<unsigned> seen(tuple.begin(), tuple.end());
        if (seen.size() == tuple.size()) ++n;
    }
    return n;
}

InclusionExclusionResult inclusion_exclusion_distinct(const ExplicitSet& X) {
    const unsigned k = X.k();
    if (k > 5)
        throw validation_error(
            "inclusion_exclusion_distinct refused for k > 5: the classical sieve evaluates "
            "2^C(k,2) intersection terms (k=6 already needs 2^15); use the cycle-type sieve, "
            "which needs only p(k) terms");
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i + 1; j < k; ++j) pairs.emplace_back(i, j);

    const unsigned long long subsets = 1ull << pairs.size();
    const SymmetricSetSpec spec = SymmetricSetSpec::from_explicit(X);
    Int total = 0;
    std::vector<unsigned> parent(k);
    for (unsigned long long mask = 0; mask < subsets; ++mask) {
        for (unsigned i = 0; i < k; ++i) parent[i] = i;
        // merge the coordinate classes forced by the selected constraints
        for (size_t b = 0; b < pairs.size(); ++b) {
            if (!(mask >> b & 1)) continue;
            unsigned ri = parent[pairs[b].first];
            while (parent[ri] != ri) ri = parent[ri];
            unsigned rj = parent[pairs[b].second];
            while (parent[rj] != rj) rj = parent[rj];
            if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
        }
        std::vector<unsigned> class_size(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            unsigned r = i;
            while (parent[r] != r) r = parent[r];
            ++class_size[r];
        }
        std::vector<unsigned> lengths;
        for (unsigned i = 0; i < k; ++i)
            if (class_size[i] > 0) lengths.push_back(class_size[i]);
        Int term = spec.fixed_point_count(lengths);
        total += (std::popcount(mask) % 2 == 0) ? term : -term;
    }
    return {total, subsets};
}

} // namespace multisieve
