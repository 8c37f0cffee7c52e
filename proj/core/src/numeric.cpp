#include "multisieve/numeric.hpp"

namespace multisieve {

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(const Int& n, unsigned r) {
    if (n < 0) throw validation_error("binomial: negative upper argument");
    if (n < r) return 0;
    Int res = 1;
    for (unsigned i = 1; i <= r; ++i) {
        res *= n - r + i;
        // divisible at every step: res is a running binomial coefficient
        res = exact_div(res, Int(i), "binomial");
    }
    return res;
}

Int int_pow(const Int& base, unsigned exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int exact_div(const Int& num, const Int& den, const std::string& context) {
    if (den == 0) throw integrity_error(context + ": division by zero");
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw integrity_error(context + ": " + num.get_str() + " is not divisible by " +
                              den.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Int rat_to_int(const Rat& value, const std::string& context) {
    if (value.get_den() != 1)
        throw integrity_error(context + ": " + value.get_str() + " is not an integer");
    return value.get_num();
}

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<unsigned> divisors(unsigned n) {
    if (n == 0) throw validation_error("divisors: n must be positive");
    std::vector<unsigned> result;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) result.push_back(d);
    return result;
}

unsigned euler_phi(unsigned n) {
    if (n == 0) throw validation_error("euler_phi: n must be positive");
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

} // namespace multisieve
