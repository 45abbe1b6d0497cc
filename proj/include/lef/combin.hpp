#ifndef LEF_COMBIN_HPP
#define LEF_COMBIN_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <vector>

namespace lef {

using Integer = boost::multiprecision::mpz_int;

/// C(n, k) as an exact integer; 0 when k < 0 or k > n or n < 0.
inline Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

/// C(n, k) as a machine integer. Callers use this only for dimension
/// bookkeeping, where the values stay far below 2^63.
inline long long binomial_ll(long long n, long long k) {
    return static_cast<long long>(binomial(n, k));
}

/// d! / (e_0! e_1! ... e_m!) for exponents summing to d.
inline Integer multinomial(const std::vector<int>& exps) {
    long long d = 0;
    for (int e : exps) d += e;
    Integer out = 1;
    for (int e : exps) {
        out *= binomial(d, e);
        d -= e;
    }
    return out;
}

/// Falling factorial n (n-1) ... (n-k+1); the coefficient picked up by
/// differentiating x^n exactly k times.
inline Integer falling_factorial(long long n, long long k) {
    Integer out = 1;
    for (long long j = 0; j < k; ++j) out *= Integer(n - j);
    return out;
}

} // namespace lef

#endif // LEF_COMBIN_HPP
