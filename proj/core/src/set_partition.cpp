#include "multisieve/set_partition.hpp"

#include <algorithm>
#include <map>

namespace multisieve {

void SetPartition::canonicalize() {
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    block_of_.assign(k_, 0);
    for (unsigned bi = 0; bi < blocks_.size(); ++bi)
        for (unsigned e : blocks_[bi]) block_of_[e] = bi;
}

SetPartition SetPartition::from_blocks(unsigned k, std::vector<std::vector<unsigned>> blocks) {
    std::vector<bool> seen(k, false);
    unsigned covered = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw validation_error("SetPartition: empty block");
        for (unsigned e : b) {
            if (e >= k) throw validation_error("SetPartition: element out of range");
            if (seen[e]) throw validation_error("SetPartition: blocks not disjoint");
            seen[e] = true;
            ++covered;
        }
    }
    if (covered != k) throw validation_error("SetPartition: blocks do not cover the ground set");
    SetPartition p;
    p.k_ = k;
    p.blocks_ = std::move(blocks);
    p.canonicalize();
    return p;
}

SetPartition SetPartition::from_rgs(const std::vector<unsigned>& rgs) {
    unsigned k = static_cast<unsigned>(rgs.size());
    unsigned nblocks = 0;
    for (unsigned v : rgs) nblocks = std::max(nblocks, v + 1);
    std::vector<std::vector<unsigned>> blocks(nblocks);
    for (unsigned i = 0; i < k; ++i) blocks[rgs[i]].push_back(i);
    return from_blocks(k, std::move(blocks));
}

SetPartition SetPartition::singletons(unsigned k) {
    std::vector<std::vector<unsigned>> blocks(k);
    for (unsigned i = 0; i < k; ++i) blocks[i] = {i};
    return from_blocks(k, std::move(blocks));
}

SetPartition SetPartition::one_block(unsigned k) {
    std::vector<unsigned> all(k);
    for (unsigned i = 0; i < k; ++i) all[i] = i;
    return from_blocks(k, {std::move(all)});
}

CycleType SetPartition::type() const {
    std::vector<unsigned> counts(k_, 0);
    for (const auto& b : blocks_) ++counts[b.size() - 1];
    return CycleType::from_counts(k_, std::move(counts));
}

bool SetPartition::operator<(const SetPartition& o) const {
    return blocks_ < o.blocks_;
}

std::vector<SetPartition> enumerate_set_partitions(unsigned k) {
    if (k == 0) throw validation_error("enumerate_set_partitions: k must be positive");
    std::vector<SetPartition> out;
    // Restricted-growth strings in lexicographic order: rgs[0] = 0 and
    // rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<unsigned> rgs(k, 0);
    std::vector<unsigned> maxv(k, 0); // maxv[i] = max of rgs[0..i]
    while (true) {
        out.push_back(SetPartition::from_rgs(rgs));
        int i = static_cast<int>(k) - 1;
        for (; i > 0; --i) {
            if (rgs[i] <= maxv[i - 1]) break;
        }
        if (i <= 0) break;
        ++rgs[i];
        maxv[i] = std::max(maxv[i - 1], rgs[i]);
        for (unsigned j = i + 1; j < k; ++j) {
            rgs[j] = 0;
            maxv[j] = maxv[j - 1];
        }
    }
    return out;
}

bool refines(const SetPartition& t, const SetPartition& s) {
    if (t.ground_size() != s.ground_size())
        throw validation_error("refines: partitions of different ground sets");
    for (const auto& block : t.blocks()) {
        unsigned target = s.block_of()[block.front()];
        for (unsigned e : block)
            if (s.block_of()[e] != target) return false;
    }
    return true;
}

Int mobius_closed(const SetPartition& t, const SetPartition& s) {
    if (!refines(t, s))
        throw validation_error("mobius_closed: first argument must refine the second");
    Int result = 1;
    for (unsigned bi = 0; bi < s.block_count(); ++bi) {
        // lambda = number of blocks of t inside this block of s
        std::vector<bool> seen(t.block_count(), false);
        unsigned lambda = 0;
        for (unsigned e : s.blocks()[bi]) {
            unsigned tb = t.block_of()[e];
            if (!seen[tb]) {
                seen[tb] = true;
                ++lambda;
            }
        }
        Int f = factorial(lambda - 1);
        result *= (lambda % 2 == 0) ? -f : f;
    }
    return result;
}

Int mobius_recursive(const SetPartition& t, const SetPartition& s) {
    if (!refines(t, s))
        throw validation_error("mobius_recursive: first argument must refine the second");
    if (t == s) return 1;
    // Materialize the interval [t, s] and evaluate the defining recursion
    // mu(t,z) over it, memoized, coarsest-last.
    std::vector<SetPartition> interval;
    for (const SetPartition& z : enumerate_set_partitions(t.ground_size()))
        if (refines(t, z) && refines(z, s)) interval.push_back(z);
    std::sort(interval.begin(), interval.end(), [](const SetPartition& a, const SetPartition& b) {
        if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
        return a < b;
    });
    std::map<SetPartition, Int> mu;
    for (const SetPartition& z : interval) {
        if (z == t) {
            mu[z] = 1;
            continue;
        }
        Int acc = 0;
        for (const SetPartition& w : interval) {
            if (w == z) continue;
            if (refines(w, z)) acc += mu.at(w);
        }
        mu[z] = -acc;
    }
    return mu.at(s);
}

} // namespace multisieve
