#pragma once

#include <functional>
#include <vector>

#include "multisieve/numeric.hpp"

namespace multisieve {

/// Conjugacy class of S_k, encoded as counts: counts[i-1] cycles of length i.
/// Invariant: sum over i of i * counts[i-1] == k. The same shape doubles as
/// the type vector (a_1,...,a_k) of a set partition (a_i blocks of size i).
struct CycleType {
    unsigned k = 0;
    std::vector<unsigned> counts; // size k; counts[i-1] = number of cycles of length i

    static CycleType from_counts(unsigned k, std::vector<unsigned> counts);

    unsigned cycle_count() const;
    /// Cycle lengths as a multiset, in decreasing order.
    std::vector<unsigned> lengths() const;

    bool operator==(const CycleType&) const = default;
};

/// All cycle types of degree k, ordered reverse-lexicographically on the
/// partition written in decreasing parts: (k) first, (1,...,1) last.
/// k = 0 yields the single empty type; negative k is rejected.
std::vector<CycleType> integer_partitions(int k);

/// N(c_1,...,c_k) = k! / (1^{c_1} c_1! 2^{c_2} c_2! ... k^{c_k} c_k!),
/// the number of permutations in S_k with this cycle type.
Int conjugacy_class_size(const CycleType& t);

/// N'(a_1,...,a_k) = k! / (1!^{a_1} a_1! ... k!^{a_k} a_k!), the number of
/// set partitions of {1,...,k} with a_i blocks of size i.
Int set_partition_type_count(const CycleType& a);

/// Unsigned Stirling number of the first kind c(k,i): permutations of S_k
/// with exactly i cycles. Out-of-range i returns 0 by convention.
Int stirling_first_unsigned(unsigned k, unsigned i);

/// Permutations in S_k with exactly i cycles, every cycle length divisible
/// by p (p >= 2). Zero unless p | k.
Int divisible_cycle_count(unsigned k, unsigned p, unsigned i);

/// sum over cycle types of degree k of N(c) * prod_i weight(i)^{c_i},
/// evaluated by direct summation over integer_partitions(k).
Rat cycle_index_eval(unsigned k, const std::function<Rat(unsigned)>& weight);

/// Same value through the exponential generating function:
/// k! * [u^k] exp(weight(1) u + weight(2) u^2/2 + ...). Two independent
/// evaluation paths; tests require them to agree exactly.
Rat cycle_index_eval_egf(unsigned k, const std::function<Rat(unsigned)>& weight);

} // namespace multisieve
