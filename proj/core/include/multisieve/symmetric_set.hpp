#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "multisieve/numeric.hpp"

namespace multisieve {

/// Finite symmetric subset of D^k given by explicit tuples. Labels are
/// opaque strings ordered by declaration; tuples hold label indices and are
/// kept sorted for binary-search membership.
///
/// Symmetry (closure under all coordinate permutations) is enforced at
/// construction: either the input is closed under the generating pair
/// {adjacent transposition, full rotation} of S_k, or symmetrize=true asks
/// for the orbit closure to be taken.
class ExplicitSet {
public:
    static ExplicitSet make(std::vector<std::string> ground_set, unsigned k,
                            std::vector<std::vector<unsigned>> tuples, bool symmetrize);

    /// Convenience: build over ground set {"0",...,"n-1"} from raw tuples.
    static ExplicitSet over_indices(unsigned ground_size, unsigned k,
                                    std::vector<std::vector<unsigned>> tuples, bool symmetrize);

    /// The full Cartesian power D^k.
    static ExplicitSet full(std::vector<std::string> ground_set, unsigned k);

    unsigned k() const { return k_; }
    unsigned ground_size() const { return static_cast<unsigned>(ground_.size()); }
    const std::vector<std::string>& ground_set() const { return ground_; }
    /// Sorted lexicographically; each tuple is a vector of label indices.
    const std::vector<std::vector<unsigned>>& tuples() const { return tuples_; }
    bool contains(const std::vector<unsigned>& tuple) const;

private:
    std::vector<std::string> ground_;
    unsigned k_ = 0;
    std::vector<std::vector<unsigned>> tuples_;
};

/// Fixed-point-count oracle keyed by the multiset of cycle lengths,
/// supplied in decreasing order. Must return |X_tau| >= 0 for any
/// permutation tau with those cycle lengths; on the all-ones multiset this
/// is |X| itself.
using CycleCountFn = std::function<Int(const std::vector<unsigned>& lengths)>;

/// A symmetric restriction X subset of D^k: either an explicit tuple set or
/// a fixed-point-count oracle. All sieve operations consume this type.
class SymmetricSetSpec {
public:
    static SymmetricSetSpec from_explicit(ExplicitSet set);
    static SymmetricSetSpec from_oracle(unsigned k, CycleCountFn count_fn);

    unsigned k() const { return k_; }
    bool is_explicit() const;
    /// Throws validation_error on the oracle variant.
    const ExplicitSet& explicit_set() const;

    /// |X_tau| for any tau whose cycle lengths form the given multiset
    /// (order irrelevant; sum must equal k). For explicit sets, counts the
    /// tuples constant on each block of consecutive indexes of the given
    /// lengths; well-definedness across permutations of the same type
    /// follows from symmetry.
    Int fixed_point_count(std::vector<unsigned> lengths) const;

private:
    unsigned k_ = 0;
    std::variant<ExplicitSet, CycleCountFn> impl_;
};

} // namespace multisieve
