#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "multisieve/errors.hpp"

namespace multisieve {

// All counting in this library is exact. Int is an arbitrary-precision
// integer, Rat an exact rational; no floating point appears anywhere.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(unsigned n);

/// binomial(n, r) for integer n >= 0; returns 0 when r > n.
/// Callers with rational-looking arguments (q/p + k/p - 1) must divide
/// exactly before calling; fractional arguments never reach this function.
Int binomial(const Int& n, unsigned r);

Int int_pow(const Int& base, unsigned exp);

/// Exact division; throws integrity_error when den does not divide num.
/// Every division in the library goes through here or rat_to_int so that
/// a broken divisibility invariant surfaces immediately.
Int exact_div(const Int& num, const Int& den, const std::string& context);

/// Converts a rational that must be an integer; throws integrity_error otherwise.
Int rat_to_int(const Rat& value, const std::string& context);

bool is_prime(unsigned n);

/// Divisors of n in increasing order (n >= 1).
std::vector<unsigned> divisors(unsigned n);

/// Euler's totient by trial factorization.
unsigned euler_phi(unsigned n);

} // namespace multisieve
