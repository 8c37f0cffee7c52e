#pragma once

#include <utility>

#include "multisieve/finite_field.hpp"
#include "multisieve/numeric.hpp"

namespace multisieve {

/// v(b) = q - 1 if b = 0, and -1 otherwise.
Int v_of(const FieldSpec& F, const FqElement& b);

/// P_k(b): partitions of b into exactly k nonzero parts over F_q, by the
/// closed three-case formula (cases on k mod p, with the floor reading of
/// k/p). Division by q must be exact; failures raise integrity_error.
Int partition_count_closed(const FieldSpec& F, unsigned k, const FqElement& b);

/// P-hat_k(b): multisets of k elements of F_q (zero allowed) summing to b,
/// by the cycle-type sieve with the linear-equation fixed-point counts;
/// internally cross-checked against the closed P-hat formula.
Int partition_count_hat_sieve(const FieldSpec& F, unsigned k, const FqElement& b);

/// P_k(b) through the sieve route, as P-hat_k(b) - P-hat_{k-1}(b).
Int partition_count_sieve(const FieldSpec& F, unsigned k, const FqElement& b);

/// P_k(b) by direct enumeration of k-multisets over the nonzero elements.
Int partition_count_brute(const FieldSpec& F, unsigned k, const FqElement& b);

/// Necklaces of length n over q colors: (1/n) sum over e | n of
/// phi(e) q^{n/e}. Division by n must be exact.
Int necklace_count(unsigned n, unsigned q);

/// Necklaces by orbit counting over all q^n strings (lexicographically
/// minimal rotation as representative). Desk-scale: q^n <= 10^7.
Int necklace_count_brute(unsigned n, unsigned q);

/// k-multisets over Z/nZ summing to 0 with every multiplicity <= q - 1:
/// (1/n) sum over e | n, e | k of
/// phi(e) [u^k] (1-u^e)^{-n/e} (1-u^{lcm(e,q)})^{gcd(e,q) n/e}.
/// Returns 0 outside 0 <= k <= n(q-1).
Int zerosum_bounded_count(unsigned n, unsigned q, unsigned k);

/// Zero-sum multisets over Z/nZ with all multiplicities < q, summed over
/// every size: the coprime-restricted divisor sum
/// (1/n) sum over e | n with gcd(e,q) = 1 of phi(e) q^{n/e}.
/// Equals necklace_count(n, q) when gcd(n, q) = 1; for gcd > 1 the divisor
/// sum is still the multiset count but the necklace equality fails.
Int zerosum_total(unsigned n, unsigned q);

/// Zero-sum multiset count by direct enumeration of multiplicity vectors.
Int zerosum_brute(unsigned n, unsigned q);

/// Same enumeration restricted to multisets of size exactly k.
Int zerosum_brute_bounded(unsigned n, unsigned q, unsigned k);

/// Both sides of the generating-function identity behind the zero-sum
/// count: the cycle-index sum with weights
/// t_i = (1 - (j+1) [ (j+1) | i ]) n [ e | i ], and
/// k! [u^k] (1-u^e)^{-n/e} (1-u^{lcm(e,j+1)})^{gcd(e,j+1) n/e}.
/// Requires e | n. Returned as (cycle-index value, series value).
std::pair<Int, Int> lemma_gf_check(unsigned n, unsigned e, unsigned j, unsigned k);

} // namespace multisieve
