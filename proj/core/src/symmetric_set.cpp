#include "multisieve/symmetric_set.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace multisieve {

namespace {

std::string tuple_to_string(const ExplicitSet& X, const std::vector<unsigned>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += X.ground_set()[t[i]];
    }
    return s + ")";
}

std::vector<unsigned> swapped01(std::vector<unsigned> t) {
    std::swap(t[0], t[1]);
    return t;
}

std::vector<unsigned> rotated(std::vector<unsigned> t) {
    std::rotate(t.begin(), t.begin() + 1, t.end());
    return t;
}

} // namespace

ExplicitSet ExplicitSet::make(std::vector<std::string> ground_set, unsigned k,
                              std::vector<std::vector<unsigned>> tuples, bool symmetrize) {
    {
        std::set<std::string> labels(ground_set.begin(), ground_set.end());
        if (labels.size() != ground_set.size())
            throw validation_error("ExplicitSet: duplicate label in ground set");
    }
    const unsigned d = static_cast<unsigned>(ground_set.size());
    for (const auto& t : tuples) {
        if (t.size() != k)
            throw validation_error("ExplicitSet: tuple length differs from k");
        for (unsigned v : t)
            if (v >= d) throw validation_error("ExplicitSet: tuple entry outside the ground set");
    }

    std::set<std::vector<unsigned>> pool(tuples.begin(), tuples.end());
    ExplicitSet X;
    X.ground_ = std::move(ground_set);
    X.k_ = k;

    if (symmetrize && k >= 2) {
        // Orbit closure under the generators (0 1) and (0 1 ... k-1).
        std::vector<std::vector<unsigned>> frontier(pool.begin(), pool.end());
        while (!frontier.empty()) {
            std::vector<std::vector<unsigned>> next;
            for (const auto& t : frontier) {
                for (auto img : {swapped01(t), rotated(t)}) {
                    if (pool.insert(img).second) next.push_back(std::move(img));
                }
            }
            frontier = std::move(next);
        }
    }
    X.tuples_.assign(pool.begin(), pool.end());

    if (!symmetrize && k >= 2) {
        // The two generators generate S_k, so closure under them is
        // closure under every coordinate permutation.
        for (const auto& t : X.tuples_) {
            for (const auto& img : {swapped01(t), rotated(t)}) {
                if (!X.contains(img))
                    throw validation_error("ExplicitSet: not symmetric; tuple " +
                                           tuple_to_string(X, t) + " has image " +
                                           tuple_to_string(X, img) + " outside the set");
            }
        }
    }
    return X;
}

ExplicitSet ExplicitSet::over_indices(unsigned ground_size, unsigned k,
                                      std::vector<std::vector<unsigned>> tuples,
                                      bool symmetrize) {
    std::vector<std::string> labels(ground_size);
    for (unsigned i = 0; i < ground_size; ++i) labels[i] = std::to_string(i);
    return make(std::move(labels), k, std::move(tuples), symmetrize);
}

ExplicitSet ExplicitSet::full(std::vector<std::string> ground_set, unsigned k) {
    const unsigned d = static_cast<unsigned>(ground_set.size());
    std::vector<std::vector<unsigned>> tuples;
    std::vector<unsigned> t(k, 0);
    if (d == 0 && k > 0) return make(std::move(ground_set), k, {}, false);
    while (true) {
        tuples.push_back(t);
        unsigned i = k;
        while (i > 0 && t[i - 1] + 1 == d) t[--i] = 0;
        if (i == 0) break;
        ++t[i - 1];
    }
    return make(std::move(ground_set), k, std::move(tuples), false);
}

bool ExplicitSet::contains(const std::vector<unsigned>& tuple) const {
    return std::binary_search(tuples_.begin(), tuples_.end(), tuple);
}

SymmetricSetSpec SymmetricSetSpec::from_explicit(ExplicitSet set) {
    SymmetricSetSpec s;
    s.k_ = set.k();
    s.impl_ = std::move(set);
    return s;
}

SymmetricSetSpec SymmetricSetSpec::from_oracle(unsigned k, CycleCountFn count_fn) {
    if (!count_fn) throw validation_error("SymmetricSetSpec: null oracle");
    SymmetricSetSpec s;
    s.k_ = k;
    s.impl_ = std::move(count_fn);
    return s;
}

bool SymmetricSetSpec::is_explicit() const {
    return std::holds_alternative<ExplicitSet>(impl_);
}

const ExplicitSet& SymmetricSetSpec::explicit_set() const {
    if (!is_explicit())
        throw validation_error("SymmetricSetSpec: operation requires an explicit tuple set, "
                               "not a cycle-type oracle");
    return std::get<ExplicitSet>(impl_);
}

Int SymmetricSetSpec::fixed_point_count(std::vector<unsigned> lengths) const {
    unsigned long total = std::accumulate(lengths.begin(), lengths.end(), 0ul);
    if (total != k_)
        throw validation_error("fixed_point_count: cycle lengths must sum to k");
    std::sort(lengths.begin(), lengths.end(), std::greater<>());

    if (const CycleCountFn* fn = std::get_if<CycleCountFn>(&impl_)) {
        Int v = (*fn)(lengths);
        if (v < 0)
            throw integrity_error("fixed_point_count: oracle returned a negative count");
        return v;
    }

    const ExplicitSet& X = std::get<ExplicitSet>(impl_);
    const unsigned m = static_cast<unsigned>(lengths.size());
    if (m == 0) return X.contains({}) ? 1 : 0;
    const unsigned d = X.ground_size();
    if (d == 0) return 0;

    // One free value per cycle, replicated along that cycle's index block.
    std::vector<unsigned> choice(m, 0);
    std::vector<unsigned> tuple(k_, 0);
    Int count = 0;
    while (true) {
        unsigned pos = 0;
        for (unsigned c = 0; c < m; ++c)
            for (unsigned r = 0; r < lengths[c]; ++r) tuple[pos++] = choice[c];
        if (X.contains(tuple)) ++count;
        unsigned i = m;
        while (i > 0 && choice[i - 1] + 1 == d) choice[--i] = 0;
        if (i == 0) break;
        ++choice[i - 1];
    }
    return count;
}

} // namespace multisieve
