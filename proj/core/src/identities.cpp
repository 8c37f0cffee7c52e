#include "multisieve/identities.hpp"

#include <random>

#include "multisieve/applications.hpp"
#include "multisieve/cycle_type.hpp"
#include "multisieve/set_partition.hpp"
#include "multisieve/sieve.hpp"

namespace multisieve {

namespace {

void record(IdentityReport& report, bool ok, const std::string& detail) {
    ++report.checks;
    if (!ok) {
        ++report.failures;
        if (report.first_failure.empty()) report.first_failure = detail;
    }
}

/// The left-hand side shared by both block-sum lemmas, restricted by a
/// per-type filter.
template <typename Filter>
Int block_sum(unsigned k, Filter&& keep) {
    Int sum = 0;
    for (const CycleType& a : integer_partitions(static_cast<int>(k))) {
        if (!keep(a)) continue;
        Int term = set_partition_type_count(a);
        for (unsigned i = 0; i < a.counts.size(); ++i)
            term *= int_pow(factorial(i + 1), a.counts[i]);
        const unsigned blocks = a.cycle_count();
        term *= factorial(blocks - 1);
        sum += (blocks % 2 == 1) ? term : -term;
    }
    return sum;
}

} // namespace

IdentityReport check_block_sum_bounded(unsigned k_max) {
    IdentityReport report{.name = "block-sum-bounded"};
    for (unsigned k = 1; k <= k_max; ++k) {
        for (unsigned j = 1; j <= k; ++j) {
            Int lhs = block_sum(k, [j](const CycleType& a) {
                for (unsigned i = j; i < a.counts.size(); ++i)
                    if (a.counts[i] != 0) return false;
                return true;
            });
            Int rhs = factorial(k - 1);
            if (k % (j + 1) == 0) rhs *= Int(1) - Int(j + 1);
            record(report, lhs == rhs,
                   "k=" + std::to_string(k) + " j=" + std::to_string(j) + ": " + lhs.get_str() +
                       " != " + rhs.get_str());
        }
    }
    return report;
}

IdentityReport check_block_sum_distinct(unsigned k_max) {
    IdentityReport report{.name = "block-sum-distinct"};
    for (unsigned k = 1; k <= k_max; ++k) {
        for (unsigned d = 1; d <= k; ++d) {
            Int lhs = block_sum(k, [d](const CycleType& a) { return a.cycle_count() == d; });
            Int rhs = factorial(k - 1) * binomial(Int(k), d);
            if (d % 2 == 0) rhs = -rhs;
            record(report, lhs == rhs,
                   "k=" + std::to_string(k) + " d=" + std::to_string(d) + ": " + lhs.get_str() +
                       " != " + rhs.get_str());
        }
    }
    return report;
}

IdentityReport check_sign_identity(unsigned k_max) {
    IdentityReport report{.name = "sign-weight"};
    for (unsigned k = 1; k <= k_max; ++k) {
        for (const CycleType& t : integer_partitions(static_cast<int>(k))) {
            Int w = weight_bounded(t.lengths(), 1);
            Int sign = ((k - t.cycle_count()) % 2 == 0) ? 1 : -1;
            record(report, w == sign,
                   "k=" + std::to_string(k) + " cycles=" + std::to_string(t.cycle_count()) +
                       ": w1=" + w.get_str() + " sign=" + sign.get_str());
        }
    }
    return report;
}

IdentityReport check_mobius_agreement(unsigned k_max) {
    IdentityReport report{.name = "mobius-closed-vs-recursive"};
    for (unsigned k = 1; k <= k_max; ++k) {
        auto partitions = enumerate_set_partitions(k);
        for (const SetPartition& t : partitions) {
            for (const SetPartition& s : partitions) {
                if (!refines(t, s)) continue;
                record(report, mobius_closed(t, s) == mobius_recursive(t, s),
                       "k=" + std::to_string(k) + ": closed and recursive Mobius disagree");
            }
        }
    }
    return report;
}

IdentityReport check_cycle_index_two_path(unsigned k_max) {
    IdentityReport report{.name = "cycle-index-two-path"};
    std::mt19937_64 rng(0xc1c1e5u);
    std::uniform_int_distribution<int> small(-3, 3);
    for (unsigned k = 0; k <= k_max; ++k) {
        for (unsigned trial = 0; trial < 3; ++trial) {
            std::vector<Rat> weights(k + 1, Rat(0));
            for (unsigned i = 1; i <= k; ++i) weights[i] = Rat(small(rng));
            auto weight = [&weights](unsigned i) { return weights[i]; };
            Rat direct = cycle_index_eval(k, weight);
            Rat egf = cycle_index_eval_egf(k, weight);
            record(report, direct == egf,
                   "k=" + std::to_string(k) + " trial=" + std::to_string(trial) + ": " +
                       direct.get_str() + " != " + egf.get_str());
        }
    }
    return report;
}

IdentityReport check_divisible_cycle_identity(unsigned k_max) {
    IdentityReport report{.name = "divisible-cycle-gf"};
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned k = p; k <= k_max; k += p) {
            for (unsigned q : {p, 2 * p, p * p}) {
                Int lhs = 0;
                for (unsigned i = 1; i <= k; ++i)
                    lhs += divisible_cycle_count(k, p, i) * int_pow(Int(q), i);
                Int rhs = factorial(k) * binomial(Int(q / p) + k / p - 1, k / p);
                record(report, lhs == rhs,
                       "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                           " q=" + std::to_string(q) + ": " + lhs.get_str() +
                           " != " + rhs.get_str());
            }
        }
    }
    return report;
}

IdentityReport check_zerosum_gf_identity(unsigned n_max, unsigned j_max, unsigned k_max) {
    IdentityReport report{.name = "zerosum-gf-two-path"};
    for (unsigned n = 1; n <= n_max; ++n) {
        for (unsigned e : divisors(n)) {
            for (unsigned j = 1; j <= j_max; ++j) {
                for (unsigned k = 0; k <= k_max; ++k) {
                    auto [lhs, rhs] = lemma_gf_check(n, e, j, k);
                    record(report, lhs == rhs,
                           "n=" + std::to_string(n) + " e=" + std::to_string(e) +
                               " j=" + std::to_string(j) + " k=" + std::to_string(k) + ": " +
                               lhs.get_str() + " != " + rhs.get_str());
                }
            }
        }
    }
    return report;
}

std::vector<IdentityReport> run_identity_suites(unsigned k_max) {
    if (k_max < 1) throw validation_error("identity suites need k_max >= 1");
    std::vector<IdentityReport> reports;
    reports.push_back(check_block_sum_bounded(k_max));
    reports.push_back(check_block_sum_distinct(k_max));
    reports.push_back(check_sign_identity(k_max));
    reports.push_back(check_mobius_agreement(std::min(k_max, 6u)));
    reports.push_back(check_cycle_index_two_path(k_max));
    reports.push_back(check_divisible_cycle_identity(std::max(k_max, 2u)));
    reports.push_back(check_zerosum_gf_identity(std::min(k_max, 8u), 4, k_max));
    return reports;
}

} // namespace multisieve
