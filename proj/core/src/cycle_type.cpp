#include "multisieve/cycle_type.hpp"

#include <numeric>

#include "multisieve/polynomial.hpp"

namespace multisieve {

CycleType CycleType::from_counts(unsigned k, std::vector<unsigned> counts) {
    if (counts.size() != k)
        throw validation_error("CycleType: counts vector must have length k");
    unsigned long total = 0;
    for (unsigned i = 0; i < counts.size(); ++i) total += static_cast<unsigned long>(i + 1) * counts[i];
    if (total != k)
        throw validation_error("CycleType: sum of i*c_i must equal k");
    CycleType t;
    t.k = k;
    t.counts = std::move(counts);
    return t;
}

unsigned CycleType::cycle_count() const {
    return std::accumulate(counts.begin(), counts.end(), 0u);
}

std::vector<unsigned> CycleType::lengths() const {
    std::vector<unsigned> out;
    for (unsigned i = counts.size(); i-- > 0;)
        for (unsigned c = 0; c < counts[i]; ++c) out.push_back(i + 1);
    return out;
}

namespace {

void emit_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts,
                     unsigned k, std::vector<CycleType>& out) {
    if (remaining == 0) {
        std::vector<unsigned> counts(k, 0);
        for (unsigned part : parts) ++counts[part - 1];
        out.push_back(CycleType::from_counts(k, std::move(counts)));
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        parts.push_back(part);
        emit_partitions(remaining - part, part, parts, k, out);
        parts.pop_back();
    }
}

} // namespace

std::vector<CycleType> integer_partitions(int k) {
    if (k < 0) throw validation_error("integer_partitions: k must be non-negative");
    const unsigned uk = static_cast<unsigned>(k);
    std::vector<CycleType> out;
    if (uk == 0) {
        out.push_back(CycleType::from_counts(0, {}));
        return out;
    }
    std::vector<unsigned> parts;
    emit_partitions(uk, uk, parts, uk, out);
    return out;
}

Int conjugacy_class_size(const CycleType& t) {
    Int denom = 1;
    for (unsigned i = 0; i < t.counts.size(); ++i) {
        if (t.counts[i] == 0) continue;
        denom *= int_pow(Int(i + 1), t.counts[i]);
        denom *= factorial(t.counts[i]);
    }
    return exact_div(factorial(t.k), denom, "conjugacy_class_size");
}

Int set_partition_type_count(const CycleType& a) {
    Int denom = 1;
    for (unsigned i = 0; i < a.counts.size(); ++i) {
        if (a.counts[i] == 0) continue;
        denom *= int_pow(factorial(i + 1), a.counts[i]);
        denom *= factorial(a.counts[i]);
    }
    return exact_div(factorial(a.k), denom, "set_partition_type_count");
}

Int stirling_first_unsigned(unsigned k, unsigned i) {
    if (i < 1 || i > k) return 0;
    // c(n,j) = c(n-1,j-1) + (n-1) c(n-1,j)
    std::vector<Int> row(k + 1, Int(0));
    row[0] = 1;
    for (unsigned n = 1; n <= k; ++n) {
        for (unsigned j = n; j >= 1; --j)
            row[j] = row[j - 1] + Int(n - 1) * row[j];
        row[0] = 0;
    }
    return row[i];
}

Int divisible_cycle_count(unsigned k, unsigned p, unsigned i) {
    if (p < 2) throw validation_error("divisible_cycle_count: p must be at least 2");
    if (k == 0 || k % p != 0) return 0;
    // Types with all lengths divisible by p are scalings of types of k/p.
    Int total = 0;
    for (const CycleType& base : integer_partitions(static_cast<int>(k / p))) {
        if (base.cycle_count() != i) continue;
        std::vector<unsigned> counts(k, 0);
        for (unsigned m = 0; m < base.counts.size(); ++m)
            counts[(m + 1) * p - 1] = base.counts[m];
        total += conjugacy_class_size(CycleType::from_counts(k, std::move(counts)));
    }
    return total;
}

Rat cycle_index_eval(unsigned k, const std::function<Rat(unsigned)>& weight) {
    Rat total(0);
    for (const CycleType& t : integer_partitions(static_cast<int>(k))) {
        Rat term(conjugacy_class_size(t));
        for (unsigned i = 0; i < t.counts.size(); ++i) {
            for (unsigned c = 0; c < t.counts[i]; ++c) term *= weight(i + 1);
        }
        total += term;
    }
    return total;
}

Rat cycle_index_eval_egf(unsigned k, const std::function<Rat(unsigned)>& weight) {
    std::vector<Rat> arg(k + 1, Rat(0));
    for (unsigned i = 1; i <= k; ++i) arg[i] = weight(i) / Rat(i);
    Polynomial egf = series_exp(Polynomial(std::move(arg), k), k);
    return Rat(factorial(k)) * egf.coeff(k);
}

} // namespace multisieve
