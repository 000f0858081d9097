#ifndef HAHN_TESTS_REAL_ORACLE_HPP
#define HAHN_TESTS_REAL_ORACLE_HPP

// Independent enclosures of exp and log built from exact rational Taylor
// sums with explicit remainder bounds. No floating point is involved, so the
// values do not depend on the library's MPFR backend.

#include <gmpxx.h>

namespace oracle
{

struct enclosure {
    mpq_class lo;
    mpq_class hi;

    bool contains(const mpq_class &x) const
    {
        return lo <= x && x <= hi;
    }
};

inline mpq_class pow2(long k)
{
    mpz_class p = 1;
    p <<= static_cast<mp_bitcnt_t>(k < 0 ? -k : k);
    return k >= 0 ? mpq_class(p) : mpq_class(1, p);
}

// exp(x) for rational x with |x| <= 4, width below 2^-bits.
inline enclosure exp_enclosure(const mpq_class &x, long bits)
{
    const mpq_class ax = abs(x);
    mpq_class sum = 0, term = 1;
    long k = 0;
    const mpq_class eps = pow2(-bits);
    while (true) {
        sum += term;
        ++k;
        term = term * x / k;
        // Tail bound |term| / (1 - |x|/(k+1)) once k+1 > 2|x|.
        if (mpq_class(k + 1) > 2 * ax && abs(term) * 2 < eps) {
            const mpq_class tail = abs(term) * 2;
            return {sum - tail, sum + tail};
        }
    }
}

// log(2) = 2 atanh(1/3), width below 2^-bits.
inline enclosure log2_enclosure(long bits)
{
    const mpq_class third(1, 3), ninth(1, 9);
    mpq_class sum = 0, power = third;
    const mpq_class eps = pow2(-bits);
    for (long k = 0;; ++k) {
        sum += 2 * power / (2 * k + 1);
        power *= ninth;
        // Remaining terms are bounded by 2 power / (1 - 1/9).
        const mpq_class tail = 2 * power * mpq_class(9, 8);
        if (tail < eps) {
            return {sum, sum + tail};
        }
    }
}

} // namespace oracle

#endif
