#pragma once

// Independent oracles shared by the unit and acceptance suites. Everything
// here recomputes expected values by a route disjoint from the library code
// it checks: pentagonal-number recurrence for partition counts, the Bell
// triangle, raw S_k enumeration, and the partition-lattice route for the
// bounded multiset count.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "multisieve/brute.hpp"
#include "multisieve/numeric.hpp"
#include "multisieve/set_partition.hpp"
#include "multisieve/symmetric_set.hpp"

namespace multisieve::testutil {

/// p(0..max) by Euler's pentagonal-number recurrence.
inline std::vector<Int> euler_partition_numbers(unsigned max) {
    std::vector<Int> p(max + 1, Int(0));
    p[0] = 1;
    for (unsigned n = 1; n <= max; ++n) {
        for (unsigned j = 1;; ++j) {
            unsigned g1 = j * (3 * j - 1) / 2;
            unsigned g2 = j * (3 * j + 1) / 2;
            if (g1 > n && g2 > n) break;
            Int sign = (j % 2 == 1) ? 1 : -1;
            if (g1 <= n) p[n] += sign * p[n - g1];
            if (g2 <= n) p[n] += sign * p[n - g2];
        }
    }
    return p;
}

/// Bell(0..max) by the Bell triangle.
inline std::vector<Int> bell_numbers(unsigned max) {
    std::vector<Int> bell{Int(1)};
    std::vector<Int> row{Int(1)};
    for (unsigned n = 1; n <= max; ++n) {
        std::vector<Int> next{row.back()};
        for (const Int& v : row) next.push_back(next.back() + v);
        bell.push_back(next.front());
        row = std::move(next);
    }
    return bell;
}

/// All permutations of {0,...,k-1} as image vectors.
inline std::vector<std::vector<unsigned>> all_permutations(unsigned k) {
    std::vector<unsigned> idx(k);
    std::iota(idx.begin(), idx.end(), 0u);
    std::vector<std::vector<unsigned>> out;
    do {
        out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

/// Cycle-type counts vector (c_1,...,c_k) of a permutation image vector.
inline std::vector<unsigned> cycle_counts_of(const std::vector<unsigned>& perm) {
    const unsigned k = static_cast<unsigned>(perm.size());
    std::vector<unsigned> counts(k, 0);
    std::vector<bool> seen(k, false);
    for (unsigned start = 0; start < k; ++start) {
        if (seen[start]) continue;
        unsigned len = 0, cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = perm[cur];
            ++len;
        }
        ++counts[len - 1];
    }
    return counts;
}

/// Cycles of a permutation as index blocks.
inline std::vector<std::vector<unsigned>> cycle_blocks_of(const std::vector<unsigned>& perm) {
    const unsigned k = static_cast<unsigned>(perm.size());
    std::vector<std::vector<unsigned>> blocks;
    std::vector<bool> seen(k, false);
    for (unsigned start = 0; start < k; ++start) {
        if (seen[start]) continue;
        std::vector<unsigned> block;
        unsigned cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            block.push_back(cur);
            cur = perm[cur];
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

/// Tuples of X constant on each of the given index blocks, counted by
/// assigning one free value per block. Blocks may be arbitrary index sets.
inline Int tuples_constant_on_blocks(const ExplicitSet& X,
                                     const std::vector<std::vector<unsigned>>& blocks) {
    const unsigned m = static_cast<unsigned>(blocks.size());
    if (m == 0) return X.contains({}) ? 1 : 0;
    const unsigned d = X.ground_size();
    if (d == 0) return 0;
    std::vector<unsigned> choice(m, 0);
    std::vector<unsigned> tuple(X.k(), 0);
    Int count = 0;
    while (true) {
        for (unsigned c = 0; c < m; ++c)
            for (unsigned pos : blocks[c]) tuple[pos] = choice[c];
        if (X.contains(tuple)) ++count;
        unsigned i = m;
        while (i > 0 && choice[i - 1] + 1 == d) choice[--i] = 0;
        if (i == 0) break;
        ++choice[i - 1];
    }
    return count;
}

/// |M_j(X)| through the partition-lattice route: Mobius inversion recovers
/// the tuples whose equality pattern is exactly each partition, and the
/// multinomial converts pattern counts to multiset counts. Independent of
/// the cycle-type engine.
inline Int mobius_route_bounded_count(const ExplicitSet& X, unsigned j) {
    const unsigned k = X.k();
    auto partitions = enumerate_set_partitions(k);
    std::vector<Int> sizes;
    sizes.reserve(partitions.size());
    for (const auto& sigma : partitions) sizes.push_back(tuples_constant_on_blocks(X, sigma.blocks()));
    Int total = 0; // k! * |M_j|
    for (size_t ti = 0; ti < partitions.size(); ++ti) {
        const auto& tau = partitions[ti];
        bool small_blocks = true;
        Int weight = 1;
        for (const auto& block : tau.blocks()) {
            if (block.size() > j) small_blocks = false;
            weight *= factorial(static_cast<unsigned>(block.size()));
        }
        if (!small_blocks) continue;
        Int exact = 0;
        for (size_t si = 0; si < partitions.size(); ++si)
            if (refines(tau, partitions[si]))
                exact += mobius_closed(tau, partitions[si]) * sizes[si];
        total += weight * exact;
    }
    return exact_div(total, factorial(k), "mobius_route_bounded_count");
}

/// Random symmetric sets built as orbit unions: sample sorted seeds, close
/// under S_k. Deterministic for a fixed seed.
inline std::vector<ExplicitSet> generate_orbit_union_sets(size_t how_many, unsigned max_ground,
                                                          unsigned max_k, std::mt19937_64& rng) {
    std::vector<ExplicitSet> out;
    out.reserve(how_many);
    std::uniform_int_distribution<unsigned> pick_d(1, max_ground);
    std::uniform_int_distribution<unsigned> pick_k(1, max_k);
    while (out.size() < how_many) {
        unsigned d = pick_d(rng);
        unsigned k = pick_k(rng);
        double space = 1.0;
        for (unsigned i = 0; i < k; ++i) space *= d;
        unsigned max_seeds = static_cast<unsigned>(std::min(space, 12.0));
        std::uniform_int_distribution<unsigned> pick_seeds(0, max_seeds);
        unsigned nseeds = pick_seeds(rng);
        std::vector<std::vector<unsigned>> seeds;
        std::uniform_int_distribution<unsigned> pick_v(0, d - 1);
        for (unsigned s = 0; s < nseeds; ++s) {
            std::vector<unsigned> t(k);
            for (auto& v : t) v = pick_v(rng);
            seeds.push_back(std::move(t));
        }
        out.push_back(ExplicitSet::over_indices(d, k, std::move(seeds), true));
    }
    return out;
}

/// Exact ring Z[x]/(x^n - 1); hosts cyclotomic character values (zeta^a is
/// the basis vector e_a). Empty coefficient vector is the zero of any n.
struct CycVec {
    std::vector<Int> c;

    CycVec() = default;
    static CycVec basis(unsigned n, unsigned idx) {
        CycVec v;
        v.c.assign(n, Int(0));
        v.c[idx % n] = 1;
        return v;
    }
    CycVec& operator+=(const CycVec& o) {
        if (c.size() < o.c.size()) c.resize(o.c.size(), Int(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    friend CycVec operator*(CycVec v, const Int& s) {
        for (auto& x : v.c) x *= s;
        return v;
    }
    friend bool operator==(const CycVec& a, const CycVec& b) {
        size_t n = std::max(a.c.size(), b.c.size());
        for (size_t i = 0; i < n; ++i) {
            Int va = i < a.c.size() ? a.c[i] : Int(0);
            Int vb = i < b.c.size() ? b.c[i] : Int(0);
            if (va != vb) return false;
        }
        return true;
    }
    friend CycVec ring_divide_exact(CycVec v, const Int& d) {
        for (auto& x : v.c) x = exact_div(x, d, "CycVec divide");
        return v;
    }
};

} // namespace multisieve::testutil
