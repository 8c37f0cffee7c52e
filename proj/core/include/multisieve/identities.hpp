#pragma once

#include <string>
#include <vector>

#include "multisieve/numeric.hpp"

namespace multisieve {

struct IdentityReport {
    std::string name;
    unsigned long checks = 0;
    unsigned long failures = 0;
    std::string first_failure; // empty when all checks pass

    bool passed() const { return failures == 0; }
};

/// Sum over set-partition types with all parts <= j of
/// N'(a) prod_i (i!)^{a_i} (-1)^{sum a - 1} (sum a - 1)!
/// against the closed form (k-1)! (1 - (j+1) [ (j+1) | k ]),
/// for 1 <= k <= k_max, 1 <= j <= k.
IdentityReport check_block_sum_bounded(unsigned k_max);

/// Same sum restricted to exactly d blocks against
/// (k-1)! (-1)^{d-1} C(k, d), for 1 <= k <= k_max, 1 <= d <= k.
IdentityReport check_block_sum_distinct(unsigned k_max);

/// w_1(tau) = (-1)^{k - c(tau)} on every cycle type, k <= k_max.
IdentityReport check_sign_identity(unsigned k_max);

/// mobius_closed = mobius_recursive on every comparable pair of the
/// refinement lattice, k <= k_max (intended for k_max <= 6).
IdentityReport check_mobius_agreement(unsigned k_max);

/// Direct cycle-index summation equals the EGF expansion for k <= k_max
/// with deterministic pseudo-random small integer weights.
IdentityReport check_cycle_index_two_path(unsigned k_max);

/// Divisible-cycle generating identity
/// sum_i p(k,i) q^i = k! C(q/p + k/p - 1, k/p)
/// for p in {2,3,5}, p | k, k <= k_max, q in {p, 2p, p^2}.
IdentityReport check_divisible_cycle_identity(unsigned k_max);

/// Two-path equality of the zero-sum generating function for
/// n <= n_max, e | n, 1 <= j <= j_max, 0 <= k <= k_max.
IdentityReport check_zerosum_gf_identity(unsigned n_max, unsigned j_max, unsigned k_max);

/// Runs every suite with ranges derived from k_max (Mobius capped at 6).
std::vector<IdentityReport> run_identity_suites(unsigned k_max);

} // namespace multisieve
