#pragma once

#include <vector>

#include "multisieve/cycle_type.hpp"
#include "multisieve/numeric.hpp"

namespace multisieve {

/// Partition of {0,...,k-1} into disjoint non-empty blocks. Canonical form:
/// each block sorted ascending, blocks ordered by their minimum element.
/// Element of the refinement lattice used as the independent witness for
/// the sieve formulas.
class SetPartition {
public:
    static SetPartition from_blocks(unsigned k, std::vector<std::vector<unsigned>> blocks);
    /// From a restricted-growth string: rgs[i] is the block index of element i.
    static SetPartition from_rgs(const std::vector<unsigned>& rgs);
    static SetPartition singletons(unsigned k); // the bottom element
    static SetPartition one_block(unsigned k);  // the top element

    unsigned ground_size() const { return k_; }
    const std::vector<std::vector<unsigned>>& blocks() const { return blocks_; }
    unsigned block_count() const { return static_cast<unsigned>(blocks_.size()); }
    /// Block index of each element, 0-based in canonical block order.
    const std::vector<unsigned>& block_of() const { return block_of_; }

    /// Type vector (a_1,...,a_k): a_i blocks of size i, as a CycleType-shaped vector.
    CycleType type() const;

    bool operator==(const SetPartition&) const = default;
    bool operator<(const SetPartition& o) const;

private:
    unsigned k_ = 0;
    std::vector<std::vector<unsigned>> blocks_;
    std::vector<unsigned> block_of_;

    void canonicalize();
};

/// Every partition of {0,...,k-1} exactly once, in lexicographic order of
/// restricted-growth strings.
std::vector<SetPartition> enumerate_set_partitions(unsigned k);

/// true iff every block of t is contained in a block of s.
bool refines(const SetPartition& t, const SetPartition& s);

/// Closed-form Mobius value on the interval [t, s] of the refinement
/// lattice: prod over blocks B_i of s of (-1)^{lambda_i - 1} (lambda_i - 1)!
/// where B_i splits into lambda_i blocks of t. Requires refines(t, s).
Int mobius_closed(const SetPartition& t, const SetPartition& s);

/// Mobius value from the recursive definition, computed by explicit
/// enumeration of the interval [t, s] with memoization. Small-k witness for
/// mobius_closed. Requires refines(t, s).
Int mobius_recursive(const SetPartition& t, const SetPartition& s);

} // namespace multisieve
